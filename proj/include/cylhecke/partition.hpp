#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace cylhecke {

// Integer partition: weakly decreasing list of positive parts.
// The empty list is the empty partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(); }
    Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(); }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long long weight() const {
        long long w = 0;
        for (int p : parts_) w += p;
        return w;
    }
    bool empty() const { return parts_.empty(); }

    // i is 1-based; parts beyond the length are 0.
    int part(int i) const {
        if (i < 1) throw std::out_of_range("Partition::part: index must be >= 1");
        return i <= length() ? parts_[i - 1] : 0;
    }
    int first() const { return parts_.empty() ? 0 : parts_[0]; }

    Partition conjugate() const;

    bool contains(const Partition& mu) const {
        if (mu.length() > length()) return false;
        for (int i = 0; i < mu.length(); ++i)
            if (parts_[i] < mu.parts_[i]) return false;
        return true;
    }

    // lambda_1 <= cols and length <= rows
    bool fits_in_box(int rows, int cols) const { return length() <= rows && first() <= cols; }

    // (lambda_1 + 1, ..., lambda_count + 1), lambda padded with zeros to `count` parts
    Partition plus_one(int count) const {
        std::vector<int> p(count, 1);
        for (int i = 0; i < length() && i < count; ++i) p[i] = parts_[i] + 1;
        return Partition(std::move(p));
    }

    // canonical rendering, e.g. "[3,1]"; empty partition is "[]"
    std::string to_string() const;
    static Partition parse(const std::string& s);

    // Total order: by weight, then lexicographic on the part lists.
    auto operator<=>(const Partition& o) const {
        if (auto c = weight() <=> o.weight(); c != 0) return c;
        return parts_ <=> o.parts_;
    }
    bool operator==(const Partition& o) const = default;

private:
    void normalize() {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    std::vector<int> parts_;
};

// All partitions of m, ordered canonically.
std::vector<Partition> partitions_of(int m);

// All partitions with at most `rows` parts, each at most `cols` (any weight).
std::vector<Partition> partitions_in_box(int rows, int cols);

// Partitions of m fitting in the box.
std::vector<Partition> partitions_of_in_box(int m, int rows, int cols);

// All distinct permutations of the parts of alpha (compositions with that multiset).
std::vector<std::vector<int>> compositions_of(const Partition& alpha);

// z_lambda = prod_i i^{m_i} m_i!
long long z_of(const Partition& lambda);

}  // namespace cylhecke
