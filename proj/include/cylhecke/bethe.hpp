#pragma once

#include <complex>
#include <string>
#include <vector>

#include "cylhecke/partition.hpp"
#include "cylhecke/tpoly.hpp"

namespace cylhecke {

using Cx = std::complex<double>;

// Bethe roots xi_j = q^{1/n} exp(2 pi i / n ((k+1)/2 + lambda_j - j)),
// j = 1..k, for lambda in P+_{k,n} and real q > 0.
std::vector<Cx> bethe_roots(const Partition& lambda, int k, int n, double q);

// Schur polynomial at complex points via the bialternant ratio; rejects
// near-coincident points (|xi - xj| < 1e-9).
Cx schur_numeric(const Partition& lambda, const std::vector<Cx>& values);

// elementary symmetric e_0..e_deg of the values
std::vector<Cx> elementary_sym(const std::vector<Cx>& values, int deg);
// complete homogeneous h_0..h_deg
std::vector<Cx> complete_sym(const std::vector<Cx>& values, int deg);
// h_r(y; a, b) from prod (1 + a x y_i) / (1 - b x y_i), r = 0..deg
std::vector<Cx> h_ab(const std::vector<Cx>& values, Cx a, Cx b, int deg);

struct NumericReport {
    bool pass = true;
    double max_residual = 0.0;
    std::string detail;
};

// || tau(x) v_xi - Lambda(x) v_xi || / || v_xi || for every Bethe vector
// on V_k, with Lambda(x) = (1 + (-1)^k q x^n b^n) prod (1+ax xi_i)/(1-bx xi_i).
NumericReport verify_eigen(int k, int n, double a, double b, double x, double q, double tol);

// sum_nu s_nu(xi_lambda) s_nu(xi_mu^{-1}) = delta n^k / prod |xi_i - xi_j|^2
NumericReport completeness_check(int k, int n, double q, double tol);

// h_{r+n}(xi;a,b) + q (-1)^k b^n h_r(xi;a,b) = 0 (r > 0) and the r = 0 variant.
NumericReport ideal_relations_check(int k, int n, double a, double b, double q, double tol);

// F_lambda(xi_mu) = delta_{lambda mu} for the idempotent functions.
NumericReport idempotent_check(int k, int n, double q, double tol);

// Gromov-Witten invariants through the Bertram-Vafa-Intriligator sum,
// separated in q-degree by a small Vandermonde solve; the extracted values
// must round to integers within 1e-6 (hard failure otherwise).
std::vector<std::pair<int, long long>> bvi_gw_numeric(const Partition& lambda,
                                                      const Partition& mu, const Partition& nu,
                                                      int k, int n,
                                                      const std::vector<double>& q_samples);

// Numeric cylindric Hecke character at real (t, q): the Bethe sum over
// Xi_{n-k,n}, normalized by (t-1)^{l(alpha)} and q^d.
double bethe_cyl_char_value(const Partition& lambda, int d, const Partition& mu,
                            const std::vector<int>& alpha, int k, int n, double t, double q);

// Reconstruct the character polynomial from t-samples (integer nodes),
// rounding the interpolated coefficients; max_rel_err reports the largest
// deviation from the rounded polynomial over the samples.
TPoly bethe_cyl_char_numeric(const Partition& lambda, int d, const Partition& mu,
                             const std::vector<int>& alpha, int k, int n,
                             const std::vector<double>& t_samples, double q,
                             double* max_rel_err = nullptr);

}  // namespace cylhecke
