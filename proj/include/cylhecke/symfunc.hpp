#pragma once

#include <map>
#include <string>
#include <vector>

#include "cylhecke/partition.hpp"
#include "cylhecke/tpoly.hpp"

namespace cylhecke {

// Polynomial in N commuting variables with TPoly coefficients, stored as a
// full sparse monomial map (every exponent vector, not only the sorted
// representative). Symmetric inputs stay symmetric; `sorted_terms` gives the
// canonical partition-keyed view used for comparison and output.
class MonomialExpansion {
public:
    explicit MonomialExpansion(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, TPoly>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exp, const TPoly& c);
    TPoly coefficient(const std::vector<int>& exp) const;

    friend MonomialExpansion operator+(const MonomialExpansion& a, const MonomialExpansion& b);
    friend MonomialExpansion operator-(const MonomialExpansion& a, const MonomialExpansion& b);
    friend MonomialExpansion operator*(const MonomialExpansion& a, const MonomialExpansion& b);
    MonomialExpansion& operator+=(const MonomialExpansion& o) { return *this = *this + o; }
    MonomialExpansion& operator-=(const MonomialExpansion& o) { return *this = *this - o; }
    MonomialExpansion& operator*=(const MonomialExpansion& o) { return *this = *this * o; }
    MonomialExpansion operator*(const TPoly& c) const;

    // drop monomials of total degree above `cap`
    MonomialExpansion truncated(int cap) const;

    // exponent vectors sorted to partition form -> coefficient
    std::map<std::vector<int>, TPoly> sorted_terms() const;
    // true when the coefficients are constant on permutations of exponents
    bool is_symmetric() const;

    bool operator==(const MonomialExpansion& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    std::string to_string() const;

private:
    int nvars_;
    std::map<std::vector<int>, TPoly> terms_;
};

// monomial symmetric function m_mu(x_1..x_N)
MonomialExpansion monomial_sym(const Partition& mu, int nvars);
// power sum p_r(x_1..x_N)
MonomialExpansion power_sum(int r, int nvars);
// Schur polynomial s_lambda(x_1..x_N) by semistandard tableau enumeration
MonomialExpansion schur_poly(const Partition& lambda, int nvars);
// skew Schur polynomial s_{lambda/mu}(x_1..x_N)
MonomialExpansion skew_schur_poly(const Partition& lambda, const Partition& mu, int nvars);

// s_lambda[(t-1)X] in N variables via the power-sum expansion
// s_lambda = sum_rho chi^lambda(rho) p_rho / z_rho with p_r -> (t^r - 1) p_r.
// Exact over TPoly; rational intermediates must clear (hard failure if not).
MonomialExpansion schur_in_tminus1_alphabet(const Partition& lambda, int nvars);

}  // namespace cylhecke
