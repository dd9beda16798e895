#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cylhecke {

// Sparse multivariate polynomial in N variables over the integers.
// Used for symbolic six-vertex weights (N=6) and mixed (t,x) bookkeeping (N=2).
template <int N>
class MPoly {
public:
    using Exp = std::array<int16_t, N>;

    MPoly() = default;
    MPoly(long long c) {
        if (c != 0) terms_[Exp{}] = c;
    }

    static MPoly var(int i, int e = 1) {
        MPoly p;
        Exp ex{};
        ex[i] = static_cast<int16_t>(e);
        p.terms_[ex] = 1;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exp, long long>& terms() const { return terms_; }

    void add_term(const Exp& e, long long c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(e, 0);
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    MPoly operator-() const {
        MPoly r;
        for (auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) {
                Exp e;
                for (int i = 0; i < N; ++i) e[i] = static_cast<int16_t>(ea[i] + eb[i]);
                r.add_term(e, checked_mul(ca, cb));
            }
        return r;
    }
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // Degree counted over the selected variables only.
    int degree_in(std::initializer_list<int> vars, const Exp& e) const {
        int d = 0;
        for (int v : vars) d += e[v];
        return d;
    }

    // Split into homogeneous components w.r.t. the selected variables.
    std::map<int, MPoly> split_by_degree(std::initializer_list<int> vars) const {
        std::map<int, MPoly> out;
        for (auto& [e, c] : terms_) out[degree_in(vars, e)].add_term(e, c);
        return out;
    }

    template <class R>
    R eval(const std::array<R, N>& x) const {
        R v(0);
        for (auto& [e, c] : terms_) {
            R p(c);
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < e[i]; ++j) p = p * x[i];
            v = v + p;
        }
        return v;
    }

    std::string to_string(const std::array<std::string, N>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, c] : terms_) {
            long long cc = c;
            if (cc > 0 && !first) os << '+';
            if (cc < 0) {
                os << '-';
                cc = -cc;
            }
            bool any = false;
            for (int i = 0; i < N; ++i) any = any || e[i] != 0;
            if (cc != 1 || !any) os << cc;
            for (int i = 0; i < N; ++i) {
                if (e[i] == 0) continue;
                os << names[i];
                if (e[i] != 1) os << '^' << e[i];
            }
            first = false;
        }
        return os.str();
    }

private:
    static long long checked_add(long long a, long long b) {
        long long r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("MPoly: overflow");
        return r;
    }
    static long long checked_mul(long long a, long long b) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("MPoly: overflow");
        return r;
    }

    std::map<Exp, long long> terms_;
};

using OmegaPoly = MPoly<6>;  // symbolic Boltzmann weights w1..w6
using TXPoly = MPoly<2>;     // bivariate (t, x)

}  // namespace cylhecke
