#include "cylhecke/maya.hpp"

#include <algorithm>

namespace cylhecke {

std::optional<MayaDiagram> partition_from_maya_window(const std::vector<int>& bits, long long lo) {
    for (int b : bits)
        if (b != 0 && b != 1) return std::nullopt;
    const long long hi = lo + static_cast<long long>(bits.size()) - 1;
    // charge via formula (a) anchored at the bottom of the window
    const long long n_minus_guess = lo - 1;  // everything below the window is 1
    long long ones_above = 0;
    for (int b : bits) ones_above += b;
    const long long charge = n_minus_guess + ones_above;
    // positions of ones from the top down, padded with the full region below lo
    std::vector<long long> ones;
    for (long long i = hi; i >= lo; --i)
        if (bits[static_cast<size_t>(i - lo)]) ones.push_back(i);
    std::vector<int> parts;
    long long j = 1;
    for (long long p : ones) {
        long long part = p - charge - 1 + j;
        if (part < 0) return std::nullopt;  // malformed: ones not eventually contiguous
        parts.push_back(static_cast<int>(part));
        ++j;
    }
    // below the window everything is 1, so the remaining parts are 0
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) return std::nullopt;
    return MayaDiagram(Partition(parts), charge);
}

long long charge_formula_a(const MayaDiagram& m) {
    long long nm = m.n_minus();
    long long c = nm;
    for (long long i = nm + 1; i < m.n_plus(); ++i) c += m.bit(i) ? 1 : 0;
    return c;
}

long long charge_formula_b(const MayaDiagram& m) {
    long long np = m.n_plus();
    long long c = np;
    for (long long i = m.n_minus() + 1; i <= np; ++i) c -= m.bit(i) ? 0 : 1;
    return c;
}

Partition partition_from_window_ones(const std::vector<int>& ones) {
    std::vector<int> sorted = ones;
    std::sort(sorted.begin(), sorted.end());
    const int k = static_cast<int>(sorted.size());
    std::vector<int> parts;
    for (int j = 1; j <= k; ++j) parts.push_back(sorted[k - j] - (k + 1 - j));
    return Partition(std::move(parts));
}

std::vector<int> window_ones_from_partition(const Partition& lambda, int k) {
    std::vector<int> ones;
    for (int j = k; j >= 1; --j) ones.push_back(k + 1 + lambda.part(j) - j);
    return ones;
}

}  // namespace cylhecke
