#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace cylhecke {

// Integer Laurent polynomial in the Hecke parameter t.
// Sparse map exponent -> coefficient; zero coefficients are never stored.
class TPoly {
public:
    TPoly() = default;
    TPoly(long long c) {
        if (c != 0) coef_[0] = c;
    }

    // c * t^e
    static TPoly term(long long c, int e) {
        TPoly p;
        if (c != 0) p.coef_[e] = c;
        return p;
    }
    static TPoly t(int e = 1) { return term(1, e); }
    // 1 + t + ... + t^{m-1}
    static TPoly t_integer(int m) {
        TPoly p;
        for (int e = 0; e < m; ++e) p.coef_[e] = 1;
        return p;
    }

    bool is_zero() const { return coef_.empty(); }
    bool is_constant() const { return coef_.empty() || (coef_.size() == 1 && coef_.begin()->first == 0); }
    long long constant_value() const {
        if (is_zero()) return 0;
        if (!is_constant()) throw std::domain_error("TPoly: not constant: " + to_string());
        return coef_.begin()->second;
    }
    int degree() const { return coef_.empty() ? 0 : coef_.rbegin()->first; }
    int low_degree() const { return coef_.empty() ? 0 : coef_.begin()->first; }
    long long coefficient(int e) const {
        auto it = coef_.find(e);
        return it == coef_.end() ? 0 : it->second;
    }
    const std::map<int, long long>& terms() const { return coef_; }

    void add_term(int e, long long c) {
        if (c == 0) return;
        auto [it, fresh] = coef_.try_emplace(e, 0);
        it->second = checked_add(it->second, c);
        if (it->second == 0) coef_.erase(it);
    }

    friend TPoly operator+(const TPoly& a, const TPoly& b) {
        TPoly r = a;
        for (auto& [e, c] : b.coef_) r.add_term(e, c);
        return r;
    }
    friend TPoly operator-(const TPoly& a, const TPoly& b) {
        TPoly r = a;
        for (auto& [e, c] : b.coef_) r.add_term(e, -c);
        return r;
    }
    TPoly operator-() const {
        TPoly r;
        for (auto& [e, c] : coef_) r.coef_[e] = -c;
        return r;
    }
    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        TPoly r;
        for (auto& [ea, ca] : a.coef_)
            for (auto& [eb, cb] : b.coef_) r.add_term(ea + eb, checked_mul(ca, cb));
        return r;
    }
    TPoly& operator+=(const TPoly& o) { return *this = *this + o; }
    TPoly& operator-=(const TPoly& o) { return *this = *this - o; }
    TPoly& operator*=(const TPoly& o) { return *this = *this * o; }

    TPoly pow(int n) const {
        TPoly r(1);
        for (int i = 0; i < n; ++i) r *= *this;
        return r;
    }

    bool operator==(const TPoly& o) const { return coef_ == o.coef_; }
    bool operator!=(const TPoly& o) const { return !(*this == o); }
    bool operator<(const TPoly& o) const { return coef_ < o.coef_; }

    long long eval_at_one() const {
        long long v = 0;
        for (auto& [e, c] : coef_) v = checked_add(v, c);
        return v;
    }

    // Evaluate at an invertible point of any ring constructible from long long.
    template <class R>
    R eval(const R& x) const {
        R v(0);
        for (auto& [e, c] : coef_) {
            R p(1);
            for (int i = 0; i < (e >= 0 ? e : -e); ++i) p = p * x;
            if (e < 0) p = R(1) / p;
            v = v + R(c) * p;
        }
        return v;
    }

    // Exact division; throws if the remainder is nonzero.
    TPoly divide_exact(const TPoly& d) const;

    // Canonical string: descending exponents, explicit signs, no spaces.
    // Examples: "t^2-t+1", "-1", "t", "2t^3+t^-1".
    std::string to_string() const;

private:
    static long long checked_add(long long a, long long b) {
        long long r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("TPoly: overflow");
        return r;
    }
    static long long checked_mul(long long a, long long b) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("TPoly: overflow");
        return r;
    }

    std::map<int, long long> coef_;
};

inline TPoly t_minus_one() { return TPoly::t() - TPoly(1); }

}  // namespace cylhecke
