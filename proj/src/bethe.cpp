#include "cylhecke/bethe.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cylhecke/six_vertex.hpp"

namespace cylhecke {

std::vector<Cx> bethe_roots(const Partition& lambda, int k, int n, double q) {
    if (q <= 0) throw std::invalid_argument("bethe_roots: q must be positive");
    std::vector<Cx> roots;
    double radius = std::pow(q, 1.0 / n);
    for (int j = 1; j <= k; ++j) {
        double phase = 2.0 * std::numbers::pi / n * ((k + 1) / 2.0 + lambda.part(j) - j);
        roots.push_back(radius * Cx(std::cos(phase), std::sin(phase)));
    }
    return roots;
}

std::vector<Cx> elementary_sym(const std::vector<Cx>& values, int deg) {
    std::vector<Cx> e(deg + 1, Cx(0));
    e[0] = Cx(1);
    int used = 0;
    for (Cx v : values) {
        ++used;
        for (int r = std::min(deg, used); r >= 1; --r) e[r] += v * e[r - 1];
    }
    return e;
}

std::vector<Cx> complete_sym(const std::vector<Cx>& values, int deg) {
    auto e = elementary_sym(values, std::min<int>(deg, static_cast<int>(values.size())));
    std::vector<Cx> h(deg + 1, Cx(0));
    h[0] = Cx(1);
    for (int m = 1; m <= deg; ++m) {
        Cx acc(0);
        for (int i = 1; i <= m && i < static_cast<int>(e.size()); ++i) {
            Cx term = e[i] * h[m - i];
            acc += (i % 2 == 1) ? term : -term;
        }
        h[m] = acc;
    }
    return h;
}

std::vector<Cx> h_ab(const std::vector<Cx>& values, Cx a, Cx b, int deg) {
    auto e = elementary_sym(values, std::min<int>(deg, static_cast<int>(values.size())));
    auto h = complete_sym(values, deg);
    std::vector<Cx> out(deg + 1, Cx(0));
    Cx apow(1);
    for (int i = 0; i <= deg; ++i) {
        if (i < static_cast<int>(e.size())) {
            Cx bpow(1);
            for (int j = 0; i + j <= deg; ++j) {
                out[i + j] += apow * bpow * e[i] * h[j];
                bpow *= b;
            }
        }
        apow *= a;
    }
    return out;
}

Cx schur_numeric(const Partition& lambda, const std::vector<Cx>& values) {
    const int k = static_cast<int>(values.size());
    if (lambda.length() > k)
        throw std::invalid_argument("schur_numeric: more parts than values");
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (std::abs(values[i] - values[j]) < 1e-9)
                throw std::invalid_argument("schur_numeric: near-coincident values");
    // bialternant: det(x_i^{lambda_j + k - j}) / prod_{i<j}(x_i - x_j)
    std::vector<std::vector<Cx>> m(k, std::vector<Cx>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[i][j] = std::pow(values[i], lambda.part(j + 1) + k - j - 1);
    // LU determinant with partial pivoting
    Cx det(1);
    for (int c = 0; c < k; ++c) {
        int piv = c;
        for (int r = c + 1; r < k; ++r)
            if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        if (std::abs(m[c][c]) == 0.0) return Cx(0);
        det *= m[c][c];
        for (int r = c + 1; r < k; ++r) {
            Cx f = m[r][c] / m[c][c];
            for (int cc = c; cc < k; ++cc) m[r][cc] -= f * m[c][cc];
        }
    }
    Cx vand(1);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) vand *= values[i] - values[j];
    return det / vand;
}

namespace {

std::vector<Cx> inverted(const std::vector<Cx>& xs) {
    std::vector<Cx> out;
    for (Cx x : xs) out.push_back(Cx(1) / x);
    return out;
}

double vandermonde_sq(const std::vector<Cx>& xs) {
    double p = 1;
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j) p *= std::norm(xs[i] - xs[j]);
    return p;
}

void track(NumericReport& rep, double residual, double tol, const std::string& what) {
    rep.max_residual = std::max(rep.max_residual, residual);
    if (residual >= tol && rep.pass) {
        rep.pass = false;
        std::ostringstream os;
        os << what << " residual " << residual;
        rep.detail = os.str();
    }
}

}  // namespace

NumericReport verify_eigen(int k, int n, double a, double b, double x, double q, double tol) {
    NumericReport rep;
    auto basis = partitions_in_box(k, n - k);
    auto tau = tau_dense<Cx>(k, n, Cx(x), Cx(q), Cx(a), Cx(b));
    for (auto& lam : basis) {
        auto xi = bethe_roots(lam, k, n, q);
        // eigenvector components s_mu(xi^{-1}) in the basis order
        auto xinv = inverted(xi);
        std::vector<Cx> v;
        double norm = 0;
        for (auto& mu : basis) {
            v.push_back(schur_numeric(mu, xinv));
            norm += std::norm(v.back());
        }
        norm = std::sqrt(norm);
        Cx eigenvalue = Cx(1) + Cx((k % 2 == 0) ? 1 : -1) * q * std::pow(Cx(x), n) * std::pow(Cx(b), n);
        for (Cx root : xi) eigenvalue *= (Cx(1) + a * x * root) / (Cx(1) - b * x * root);
        double res = 0;
        for (size_t i = 0; i < basis.size(); ++i) {
            Cx acc(0);
            for (size_t j = 0; j < basis.size(); ++j) acc += tau[i][j] * v[j];
            res += std::norm(acc - eigenvalue * v[i]);
        }
        track(rep, std::sqrt(res) / norm, tol, "eigen " + lam.to_string());
    }
    return rep;
}

NumericReport completeness_check(int k, int n, double q, double tol) {
    NumericReport rep;
    auto basis = partitions_in_box(k, n - k);
    for (auto& lam : basis)
        for (auto& mu : basis) {
            auto xl = bethe_roots(lam, k, n, q);
            auto xm = bethe_roots(mu, k, n, q);
            Cx sum(0);
            for (auto& nu : basis) sum += schur_numeric(nu, xl) * schur_numeric(nu, inverted(xm));
            Cx expect = (lam == mu) ? Cx(std::pow(double(n), k) / vandermonde_sq(xl)) : Cx(0);
            double scale = std::max(1.0, std::abs(expect));
            track(rep, std::abs(sum - expect) / scale, tol,
                  "completeness " + lam.to_string() + "," + mu.to_string());
        }
    return rep;
}

NumericReport ideal_relations_check(int k, int n, double a, double b, double q, double tol) {
    NumericReport rep;
    const int extra = 4;
    for (auto& lam : partitions_in_box(k, n - k)) {
        auto xi = bethe_roots(lam, k, n, q);
        auto h = h_ab(xi, Cx(a), Cx(b), n + extra);
        double sgn = (k % 2 == 0) ? 1 : -1;
        // r = 0 variant
        Cx lhs0 = h[n] - Cx(q * sgn) * std::pow(Cx(b), n - k) *
                             (std::pow(Cx(-a), k) - std::pow(Cx(b), k));
        track(rep, std::abs(lhs0) / std::max(1.0, std::abs(h[n])), tol,
              "ideal r=0 " + lam.to_string());
        for (int r = 1; r <= extra; ++r) {
            Cx lhs = h[n + r] + Cx(q * sgn) * std::pow(Cx(b), n) * h[r];
            track(rep, std::abs(lhs) / std::max(1.0, std::abs(h[n + r])), tol,
                  "ideal r=" + std::to_string(r) + " " + lam.to_string());
        }
    }
    return rep;
}

NumericReport idempotent_check(int k, int n, double q, double tol) {
    NumericReport rep;
    auto basis = partitions_in_box(k, n - k);
    for (auto& lam : basis) {
        auto xl = bethe_roots(lam, k, n, q);
        double norm = vandermonde_sq(xl) / std::pow(double(n), k);
        for (auto& mu : basis) {
            auto xm = bethe_roots(mu, k, n, q);
            Cx sum(0);
            for (auto& nu : basis)
                sum += schur_numeric(nu, inverted(xl)) * schur_numeric(nu, xm);
            Cx val = sum * norm;
            Cx expect = (lam == mu) ? Cx(1) : Cx(0);
            track(rep, std::abs(val - expect), tol,
                  "idempotent " + lam.to_string() + "," + mu.to_string());
        }
    }
    return rep;
}

namespace {

// solve a small real linear system (Gaussian elimination, long double)
std::vector<long double> solve(std::vector<std::vector<long double>> m,
                               std::vector<long double> rhs) {
    const size_t n = m.size();
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        for (size_t r = c + 1; r < n; ++r)
            if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        std::swap(m[piv], m[c]);
        std::swap(rhs[piv], rhs[c]);
        for (size_t r = c + 1; r < n; ++r) {
            long double f = m[r][c] / m[c][c];
            for (size_t cc = c; cc < n; ++cc) m[r][cc] -= f * m[c][cc];
            rhs[r] -= f * rhs[c];
        }
    }
    std::vector<long double> x(n, 0);
    for (size_t c = n; c-- > 0;) {
        long double acc = rhs[c];
        for (size_t cc = c + 1; cc < n; ++cc) acc -= m[c][cc] * x[cc];
        x[c] = acc / m[c][c];
    }
    return x;
}

}  // namespace

std::vector<std::pair<int, long long>> bvi_gw_numeric(const Partition& lambda,
                                                      const Partition& mu, const Partition& nu,
                                                      int k, int n,
                                                      const std::vector<double>& q_samples) {
    const int dmax = static_cast<int>((mu.weight() + nu.weight()) / n);
    if (static_cast<int>(q_samples.size()) < dmax + 1)
        throw std::invalid_argument("bvi_gw_numeric: not enough q samples");
    auto labels = partitions_in_box(k, n - k);
    std::vector<long double> values;
    for (double q : q_samples) {
        Cx sum(0);
        for (auto& rho : labels) {
            auto xi = bethe_roots(rho, k, n, q);
            sum += schur_numeric(lambda, inverted(xi)) * schur_numeric(mu, xi) *
                   schur_numeric(nu, xi) * Cx(vandermonde_sq(xi) / std::pow(double(n), k));
        }
        if (std::abs(sum.imag()) > 1e-6 * std::max(1.0, std::abs(sum.real())))
            throw std::runtime_error("bvi_gw_numeric: non-real sum");
        values.push_back(sum.real());
    }
    // Vandermonde in q^d
    std::vector<std::vector<long double>> m;
    for (int s = 0; s <= dmax; ++s) {
        std::vector<long double> row;
        long double p = 1;
        for (int d = 0; d <= dmax; ++d) {
            row.push_back(p);
            p *= q_samples[s];
        }
        m.push_back(std::move(row));
    }
    auto coefs = solve(std::move(m), std::vector<long double>(values.begin(),
                                                              values.begin() + dmax + 1));
    std::vector<std::pair<int, long long>> out;
    for (int d = 0; d <= dmax; ++d) {
        long double c = coefs[d];
        long long rounded = llround(static_cast<double>(c));
        if (std::abs(static_cast<double>(c) - rounded) > 1e-6)
            throw std::runtime_error("bvi_gw_numeric: non-integral coefficient");
        if (rounded != 0) out.push_back({d, rounded});
    }
    return out;
}

double bethe_cyl_char_value(const Partition& lambda, int d, const Partition& mu,
                            const std::vector<int>& alpha, int k, int n, double t, double q) {
    const int kv = n - k;
    auto labels = partitions_in_box(kv, k);
    int ell = 0, maxpart = 0, total = 0;
    for (int a : alpha)
        if (a > 0) {
            ell++;
            maxpart = std::max(maxpart, a);
            total += a;
        }
    (void)total;
    Cx sum(0);
    for (auto& rho : labels) {
        auto xi = bethe_roots(rho, kv, n, q);
        auto h = h_ab(xi, Cx(t), Cx(-1), maxpart);
        Cx hprod(1);
        for (int a : alpha)
            if (a > 0) hprod *= h[a];
        sum += hprod * schur_numeric(lambda.conjugate(), inverted(xi)) *
               schur_numeric(mu.conjugate(), xi) *
               Cx(vandermonde_sq(xi) / std::pow(double(n), kv));
    }
    double denom = std::pow(t - 1.0, ell) * std::pow(q, d);
    Cx val = sum / denom;
    if (std::abs(val.imag()) > 1e-6 * std::max(1.0, std::abs(val.real())))
        throw std::runtime_error("bethe_cyl_char_value: non-real value");
    return val.real();
}

TPoly bethe_cyl_char_numeric(const Partition& lambda, int d, const Partition& mu,
                             const std::vector<int>& alpha, int k, int n,
                             const std::vector<double>& t_samples, double q,
                             double* max_rel_err) {
    const size_t m = t_samples.size();
    std::vector<long double> values;
    for (double t : t_samples)
        values.push_back(bethe_cyl_char_value(lambda, d, mu, alpha, k, n, t, q));
    std::vector<std::vector<long double>> vand;
    for (size_t s = 0; s < m; ++s) {
        std::vector<long double> row;
        long double p = 1;
        for (size_t e = 0; e < m; ++e) {
            row.push_back(p);
            p *= t_samples[s];
        }
        vand.push_back(std::move(row));
    }
    auto coefs = solve(std::move(vand), values);
    TPoly out;
    for (size_t e = 0; e < m; ++e)
        out.add_term(static_cast<int>(e), llround(static_cast<double>(coefs[e])));
    if (max_rel_err) {
        double err = 0;
        for (size_t s = 0; s < m; ++s) {
            double exact = 0, p = 1;
            for (size_t e = 0; e < m; ++e) {
                exact += static_cast<double>(out.coefficient(static_cast<int>(e))) * p;
                p *= t_samples[s];
            }
            err = std::max(err, std::abs(exact - static_cast<double>(values[s])) /
                                    std::max(1.0, std::abs(exact)));
        }
        *max_rel_err = err;
    }
    return out;
}

}  // namespace cylhecke
