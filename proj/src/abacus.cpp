#include "cylhecke/abacus.hpp"

#include <algorithm>
#include <set>

namespace cylhecke {

namespace {

// beta numbers lambda_i + L - i, i = 1..L, for a fixed frame length L
std::set<long long> beta_set(const Partition& lambda, int L) {
    std::set<long long> b;
    for (int i = 1; i <= L; ++i) b.insert(lambda.part(i) + L - i);
    return b;
}

Partition partition_from_beta(const std::set<long long>& betas, int L) {
    std::vector<long long> desc(betas.rbegin(), betas.rend());
    std::vector<int> parts;
    for (int i = 1; i <= L; ++i) parts.push_back(static_cast<int>(desc[i - 1] - (L - i)));
    return Partition(std::move(parts));
}

}  // namespace

CoreDecomposition core_decompose(const Partition& lambda, int n, RemovalOrder order) {
    const int L = lambda.length() + n;  // frame with room for every removal
    std::set<long long> beads = beta_set(lambda, L);
    CoreDecomposition out;
    for (;;) {
        long long pick = -1;
        if (order == RemovalOrder::TopDown) {
            for (auto it = beads.rbegin(); it != beads.rend(); ++it)
                if (*it >= n && !beads.count(*it - n)) {
                    pick = *it;
                    break;
                }
        } else {
            for (long long b : beads)
                if (b >= n && !beads.count(b - n)) {
                    pick = b;
                    break;
                }
        }
        if (pick < 0) break;
        int rows = 1;
        for (long long b = pick - n + 1; b < pick; ++b) rows += beads.count(b) ? 1 : 0;
        out.removal_rows.push_back(rows);
        out.n_weight++;
        beads.erase(pick);
        beads.insert(pick - n);
    }
    out.core = partition_from_beta(beads, L);
    int flips = 0;
    for (int r : out.removal_rows) flips += r - 1;
    out.sign = flips % 2 == 0 ? 1 : -1;
    return out;
}

int natural_numbering_sign(const Partition& lambda, int n) {
    const int L = lambda.length() + n;
    std::set<long long> beads = beta_set(lambda, L);
    // conceptually all positions < 0 hold beads; rows are full below row 0
    long long max_pos = *beads.rbegin();
    long long rows_count = max_pos / n + 1;
    auto occupied = [&](long long pos) { return pos < 0 || beads.count(pos) > 0; };
    // lowest row with a gap
    long long h0 = 0;
    for (long long h = 0; h <= rows_count; ++h) {
        bool full = true;
        for (int r = 0; r < n; ++r) full = full && occupied(h * n + r);
        if (!full) {
            h0 = h;
            break;
        }
    }
    // natural numbering of lambda's beads from row h0 up, reading order
    std::vector<long long> numbered;  // numbered[i] = position of bead labelled i+1
    for (long long pos = h0 * n; pos <= max_pos; ++pos)
        if (beads.count(pos)) numbered.push_back(pos);
    // drop beads down their runners; slots below h0*n are full, so the
    // beads on runner r stack into rows h0, h0+1, ... in order
    std::vector<std::vector<int>> runner_labels(n);  // bottom to top per runner
    for (size_t i = 0; i < numbered.size(); ++i)
        runner_labels[numbered[i] % n].push_back(static_cast<int>(i + 1));
    // read the dropped configuration in natural (reading) order and collect
    // the carried labels; parity of that word is sgn(w_lambda)
    std::vector<int> word;
    size_t total = numbered.size();
    for (long long h = h0; word.size() < total; ++h)
        for (int r = 0; r < n; ++r) {
            size_t idx = static_cast<size_t>(h - h0);
            if (idx < runner_labels[r].size()) word.push_back(runner_labels[r][idx]);
        }
    int inversions = 0;
    for (size_t i = 0; i < word.size(); ++i)
        for (size_t j = i + 1; j < word.size(); ++j)
            if (word[i] > word[j]) inversions++;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace cylhecke
