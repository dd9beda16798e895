#include "cylhecke/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "cylhecke/classical.hpp"
#include "cylhecke/frac.hpp"

namespace cylhecke {

void MonomialExpansion::add_term(const std::vector<int>& exp, const TPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(exp, TPoly());
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TPoly MonomialExpansion::coefficient(const std::vector<int>& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? TPoly() : it->second;
}

MonomialExpansion operator+(const MonomialExpansion& a, const MonomialExpansion& b) {
    MonomialExpansion r = a;
    for (auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MonomialExpansion operator-(const MonomialExpansion& a, const MonomialExpansion& b) {
    MonomialExpansion r = a;
    for (auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

MonomialExpansion operator*(const MonomialExpansion& a, const MonomialExpansion& b) {
    MonomialExpansion r(a.nvars_);
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_) {
            std::vector<int> e(a.nvars_);
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MonomialExpansion MonomialExpansion::operator*(const TPoly& c) const {
    MonomialExpansion r(nvars_);
    for (auto& [e, t] : terms_) r.add_term(e, t * c);
    return r;
}

MonomialExpansion MonomialExpansion::truncated(int cap) const {
    MonomialExpansion r(nvars_);
    for (auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) <= cap) r.add_term(e, c);
    return r;
}

std::map<std::vector<int>, TPoly> MonomialExpansion::sorted_terms() const {
    std::map<std::vector<int>, TPoly> out;
    for (auto& [e, c] : terms_) {
        std::vector<int> key = e;
        std::sort(key.begin(), key.end(), std::greater<int>());
        auto it = out.find(key);
        if (it == out.end()) out.emplace(std::move(key), c);
    }
    return out;
}

bool MonomialExpansion::is_symmetric() const {
    auto sorted = sorted_terms();
    long long expected = 0, actual = static_cast<long long>(terms_.size());
    for (auto& [key, c] : sorted) {
        // number of distinct permutations of the exponent vector
        std::vector<int> v = key;
        std::sort(v.begin(), v.end());
        long long perms = 1, n = 1;
        std::map<int, int> mult;
        for (int x : v) mult[x]++;
        for (size_t i = 1; i <= v.size(); ++i) perms *= static_cast<long long>(i);
        for (auto& [x, m] : mult)
            for (int i = 1; i <= m; ++i) perms /= i;
        expected += perms;
        (void)n;
        // all permutations must carry the same coefficient
        std::vector<int> p = v;
        do {
            if (!(coefficient(p) == c)) return false;
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return expected == actual;
}

std::string MonomialExpansion::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : sorted_terms()) {
        if (!first) os << " + ";
        os << '(' << c.to_string() << ")*m[";
        bool f2 = true;
        for (int x : e) {
            if (x == 0) break;
            if (!f2) os << ',';
            os << x;
            f2 = false;
        }
        os << ']';
        first = false;
    }
    return first ? "0" : os.str();
}

MonomialExpansion monomial_sym(const Partition& mu, int nvars) {
    MonomialExpansion out(nvars);
    if (mu.length() > nvars) return out;
    std::vector<int> e(nvars, 0);
    for (int i = 0; i < mu.length(); ++i) e[i] = mu.part(i + 1);
    std::sort(e.begin(), e.end());
    do {
        out.add_term(e, TPoly(1));
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

MonomialExpansion power_sum(int r, int nvars) {
    MonomialExpansion out(nvars);
    for (int i = 0; i < nvars; ++i) {
        std::vector<int> e(nvars, 0);
        e[i] = r;
        out.add_term(e, TPoly(1));
    }
    return out;
}

namespace {

// enumerate semistandard fillings of lambda/mu with entries <= nvars,
// accumulating the content exponent vectors
void ssyt_fill(const Partition& lambda, const Partition& mu, int nvars, int i, int j,
               std::vector<std::vector<int>>& fill, std::vector<int>& content,
               MonomialExpansion& out) {
    int rows = lambda.length();
    if (i == rows) {
        out.add_term(content, TPoly(1));
        return;
    }
    if (j > lambda.part(i + 1) - 1) {
        ssyt_fill(lambda, mu, nvars, i + 1, mu.part(i + 2), fill, content, out);
        return;
    }
    int lo = 1;
    if (j > mu.part(i + 1)) lo = std::max(lo, fill[i][j - 1]);             // row weak
    if (i > 0 && j < lambda.part(i) && j >= mu.part(i)) lo = std::max(lo, fill[i - 1][j] + 1);  // col strict
    for (int v = lo; v <= nvars; ++v) {
        fill[i][j] = v;
        content[v - 1]++;
        ssyt_fill(lambda, mu, nvars, i, j + 1, fill, content, out);
        content[v - 1]--;
    }
}

}  // namespace

MonomialExpansion skew_schur_poly(const Partition& lambda, const Partition& mu, int nvars) {
    MonomialExpansion out(nvars);
    if (!lambda.contains(mu)) return out;
    std::vector<std::vector<int>> fill(lambda.length());
    for (int i = 0; i < lambda.length(); ++i) fill[i].assign(lambda.part(i + 1), 0);
    std::vector<int> content(nvars, 0);
    ssyt_fill(lambda, mu, nvars, 0, mu.part(1), fill, content, out);
    return out;
}

MonomialExpansion schur_poly(const Partition& lambda, int nvars) {
    return skew_schur_poly(lambda, Partition(), nvars);
}

MonomialExpansion schur_in_tminus1_alphabet(const Partition& lambda, int nvars) {
    const int m = static_cast<int>(lambda.weight());
    // accumulate with Frac coefficients per t-power, clear at the end
    std::map<std::vector<int>, std::map<int, Frac>> acc;
    for (auto& rho : partitions_of(m)) {
        long long chi = classical_character(lambda, rho.parts());
        if (chi == 0) continue;
        Frac coef(chi, z_of(rho));
        // product over parts of (t^r - 1) p_r(x)
        MonomialExpansion prod(nvars);
        prod.add_term(std::vector<int>(nvars, 0), TPoly(1));
        for (int r : rho.parts()) {
            MonomialExpansion pr = power_sum(r, nvars) * (TPoly::t(r) - TPoly(1));
            prod *= pr;
        }
        for (auto& [e, c] : prod.terms())
            for (auto& [te, tc] : c.terms()) acc[e][te] += coef * Frac(tc);
    }
    MonomialExpansion out(nvars);
    for (auto& [e, tmap] : acc) {
        TPoly c;
        for (auto& [te, f] : tmap) {
            if (f.is_zero()) continue;
            c.add_term(te, f.as_integer());  // throws if the rationals did not clear
        }
        out.add_term(e, c);
    }
    return out;
}

}  // namespace cylhecke
