#include "cylhecke/partition.hpp"

#include <algorithm>
#include <sstream>

namespace cylhecke {

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> c(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) c[j]++;
    return Partition(std::move(c));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

Partition Partition::parse(const std::string& s) {
    std::string body = s;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw std::invalid_argument("Partition::parse: unbalanced brackets");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> parts;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

namespace {

void gen_partitions(int m, int max_part, int max_len, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (m == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_len == 0) return;
    for (int p = std::min(m, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(m - p, p, max_len - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int m) {
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(m, m, m, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    for (int m = 0; m <= rows * cols; ++m) {
        auto part = partitions_of_in_box(m, rows, cols);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<Partition> partitions_of_in_box(int m, int rows, int cols) {
    std::vector<Partition> out;
    if (m > rows * cols || m < 0) return out;
    std::vector<int> cur;
    gen_partitions(m, cols, rows, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> compositions_of(const Partition& alpha) {
    std::vector<int> v = alpha.parts();
    std::sort(v.begin(), v.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

long long z_of(const Partition& lambda) {
    long long z = 1;
    int run = 0, prev = -1;
    for (int p : lambda.parts()) {
        if (p == prev) {
            ++run;
        } else {
            prev = p;
            run = 1;
        }
        z *= static_cast<long long>(p) * run;
    }
    return z;
}

}  // namespace cylhecke
