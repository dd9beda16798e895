#include "cylhecke/fock.hpp"

#include <set>
#include <stdexcept>

#include "cylhecke/abacus.hpp"
#include "cylhecke/brh.hpp"

namespace cylhecke {

FockVector fermionic_a_apply(const FockVector& v, int r, HalfVertex variant) {
    FockVector out;
    out.charge = v.charge;
    out.cap = v.cap;
    for (auto& [mu, coef] : v.terms) {
        for (auto& [lam, st] : enumerate_brh_additions(mu, r)) {
            if (lam.weight() > v.cap) continue;
            TPoly w(1);
            for (auto& h : st.hooks) {
                TPoly f;
                if (variant == HalfVertex::Normal) {
                    f = t_minus_one() * TPoly::t(h.cols - 1);
                    if (h.rows % 2 == 0) f = -f;
                } else {
                    f = (TPoly(1) - TPoly::t()) * TPoly::t(h.rows - 1);
                    if (h.rows % 2 == 0) f = -f;
                }
                w *= f;
            }
            out.add(lam, coef * w);
        }
    }
    return out;
}

namespace {

// window string with explicit bits; positions [lo, hi], all-ones below lo
struct WindowState {
    long long lo;
    std::vector<int> bits;
    bool bit(long long p) const {
        return p < lo ? true
                      : (p > lo + static_cast<long long>(bits.size()) - 1
                             ? false
                             : bits[static_cast<size_t>(p - lo)] != 0);
    }
    int ones_above(long long p) const {  // strictly above position p
        int c = 0;
        for (size_t i = 0; i < bits.size(); ++i)
            if (lo + static_cast<long long>(i) > p && bits[i]) ++c;
        return c;
    }
};

// psi^+_j(t): flip 0 -> 1 at j, factor (-t)^{#ones above j}
bool psi_plus(WindowState& s, long long j, TPoly& factor) {
    if (s.bit(j)) return false;
    int m = s.ones_above(j);
    factor *= TPoly::term(m % 2 == 0 ? 1 : -1, m);
    s.bits[static_cast<size_t>(j - s.lo)] = 1;
    return true;
}

// psi^-_i(t): flip 1 -> 0 at i, factor (-t)^{-#ones above i}
bool psi_minus(WindowState& s, long long i, TPoly& factor) {
    if (!s.bit(i)) return false;
    int m = s.ones_above(i);
    factor *= TPoly::term(m % 2 == 0 ? 1 : -1, -m);
    s.bits[static_cast<size_t>(i - s.lo)] = 0;
    return true;
}

// E_{ij}(t) = (1-t) psi^-_i(t) psi^+_j(t)
bool apply_E(WindowState& s, long long i, long long j, TPoly& factor) {
    if (!psi_plus(s, j, factor)) return false;
    if (!psi_minus(s, i, factor)) return false;
    factor *= TPoly(1) - TPoly::t();
    return true;
}

void direct_tuples(const WindowState& base, long long min_start, long long hi, int remaining,
                   std::vector<std::pair<long long, long long>>& intervals, const TPoly& coef,
                   FockVector& out, long long charge) {
    if (remaining == 0) {
        WindowState s = base;
        TPoly factor(1);
        // operator product: rightmost factor acts first
        for (auto it = intervals.rbegin(); it != intervals.rend(); ++it)
            if (!apply_E(s, it->first, it->second, factor)) return;
        auto decoded = partition_from_maya_window(s.bits, s.lo);
        if (!decoded) throw std::logic_error("fermionic_a_direct: bad window state");
        if (decoded->charge() != charge) throw std::logic_error("fermionic_a_direct: charge drift");
        out.add(decoded->partition(), coef * factor);
        return;
    }
    for (long long i = min_start; i <= hi; ++i)
        for (long long j = i + 1; j <= std::min(hi, i + remaining); ++j) {
            intervals.push_back({i, j});
            direct_tuples(base, j + 1, hi, remaining - static_cast<int>(j - i), intervals, coef,
                          out, charge);
            intervals.pop_back();
        }
}

}  // namespace

FockVector fermionic_a_direct(const FockVector& v, int r) {
    FockVector out;
    out.charge = v.charge;
    out.cap = v.cap;
    if (r == 0) return v;
    for (auto& [mu, coef] : v.terms) {
        MayaDiagram m(mu, v.charge);
        long long lo = m.n_minus() - r - 1, hi = m.n_plus() + r + 1;
        WindowState base{lo, {}};
        for (long long p = lo; p <= hi; ++p) base.bits.push_back(m.bit(p) ? 1 : 0);
        std::vector<std::pair<long long, long long>> intervals;
        // overall factor t^r from the (xt)^... prefactor of the half-vertex operator
        direct_tuples(base, lo, hi, r, intervals, coef * TPoly::t(r), out, v.charge);
    }
    return out;
}

StateVector fermionic_projection(const FockVector& v, int k, int n, int q_cap) {
    if (v.charge != k) throw std::invalid_argument("fermionic_projection: charge must equal k");
    StateVector out;
    for (auto& [lam, coef] : v.terms) {
        if (lam.length() > k) continue;
        auto cd = core_decompose(lam, n);
        if (cd.core.first() > n - k) continue;
        int d = cd.n_weight;
        int sgn = cd.sign * (((k - 1) * d) % 2 == 0 ? 1 : -1);
        QSeries c = QSeries::q_term(q_cap, d, coef * TPoly(sgn));
        if (c.is_zero()) continue;
        auto [it, fresh] = out.try_emplace(cd.core, QSeries(q_cap));
        it->second += c;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace cylhecke
