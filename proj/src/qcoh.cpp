#include "cylhecke/qcoh.hpp"

#include <sstream>

#include "cylhecke/abacus.hpp"
#include "cylhecke/classical.hpp"
#include "cylhecke/cylchar.hpp"

namespace cylhecke {

QClass rim_hook_project(const Partition& lambda, int k, int n, int q_cap) {
    QClass out{k, n, {}};
    if (lambda.length() > k) return out;
    auto cd = core_decompose(lambda, n);
    if (cd.core.first() > n - k) return out;
    int sgn = cd.sign * (((k - 1) * cd.n_weight) % 2 == 0 ? 1 : -1);
    out.add(cd.core, QSeries::q_term(q_cap, cd.n_weight, TPoly(sgn)));
    return out;
}

QClass quantum_product(const Partition& mu, const Partition& nu, int k, int n) {
    const int q_cap = static_cast<int>((mu.weight() + nu.weight()) / n) + 1;
    QClass out{k, n, {}};
    int w = static_cast<int>(mu.weight() + nu.weight());
    for (auto& rho : partitions_of_in_box(w, mu.length() + nu.length(), mu.first() + nu.first())) {
        long long c = lr_coefficient(rho, mu, nu);
        if (c == 0) continue;
        QClass proj = rim_hook_project(rho, k, n, q_cap);
        for (auto& [core, qs] : proj.coef) out.add(core, qs * TPoly(c));
    }
    return out;
}

long long gw_invariant(const Partition& lambda, int d, const Partition& mu, const Partition& nu,
                       int k, int n) {
    if (mu.weight() + nu.weight() != lambda.weight() + static_cast<long long>(d) * n) return 0;
    QClass prod = quantum_product(mu, nu, k, n);
    auto it = prod.coef.find(lambda);
    if (it == prod.coef.end()) return 0;
    return it->second.coefficient(d).constant_value();
}

std::vector<GwEntry> gw_table(int k, int n, int dmax) {
    std::vector<GwEntry> out;
    auto basis = partitions_in_box(k, n - k);
    for (auto& mu : basis)
        for (auto& nu : basis) {
            QClass prod = quantum_product(mu, nu, k, n);
            for (auto& [lam, qs] : prod.coef)
                for (int d : qs.support()) {
                    if (d > dmax) continue;
                    out.push_back({lam, mu, nu, d, qs.coefficient(d).constant_value()});
                }
        }
    return out;
}

namespace {

// extend the product bilinearly to a QClass times a basis element
QClass combine(const QClass& x, const Partition& sigma, int q_cap) {
    QClass out{x.k, x.n, {}};
    for (auto& [rho, qs] : x.coef) {
        QClass p = quantum_product(rho, sigma, x.k, x.n);
        for (auto& [lam, ps] : p.coef)
            for (int d : qs.support()) {
                QSeries shifted = QSeries(q_cap, qs.coefficient(d)) * ps;
                out.add(lam, shifted.q_shift(d));
            }
    }
    return out;
}

}  // namespace

bool quantum_product_associative(int k, int n) {
    auto basis = partitions_in_box(k, n - k);
    const int q_cap = 3 * k * (n - k) / n + 2;
    for (auto& a : basis)
        for (auto& b : basis)
            for (auto& c : basis) {
                QClass ab = quantum_product(a, b, k, n);
                QClass lhs = combine(ab, c, q_cap);
                QClass bc = quantum_product(b, c, k, n);
                QClass rhs = combine(bc, a, q_cap);
                // both re-capped to q_cap by combine
                if (!(lhs == rhs)) return false;
            }
    return true;
}

TheoremReport verify_theorem_main(const Partition& lambda, int d, int k, int n, int m1, int m2) {
    TheoremReport rep;
    // cached one-sided characters
    std::map<std::tuple<Partition, int, std::vector<int>>, TPoly> cache;
    auto cyl = [&](const Partition& p, int dd, const std::vector<int>& content) {
        auto key = std::make_tuple(p, dd, content);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
        TPoly v = cyl_char_transfer(p, dd, Partition(), content, k, n);
        cache.emplace(std::move(key), v);
        return v;
    };
    auto basis = partitions_in_box(k, n - k);
    for (auto& alpha : partitions_of(m1))
        for (auto& beta : partitions_of(m2)) {
            std::vector<int> joint = alpha.parts();
            for (int x : beta.parts()) joint.push_back(x);
            TPoly lhs = cyl_char_transfer(lambda, d, Partition(), joint, k, n);
            TPoly rhs;
            for (int d1 = 0; d1 <= d; ++d1)
                for (int d2 = 0; d1 + d2 <= d; ++d2)
                    for (auto& mu : basis) {
                        if (mu.weight() != m1 - static_cast<long long>(d1) * n) continue;
                        TPoly left = cyl(mu, d1, alpha.parts());
                        if (left.is_zero()) continue;
                        for (auto& nu : basis) {
                            if (nu.weight() != m2 - static_cast<long long>(d2) * n) continue;
                            long long c = gw_invariant(lambda, d - d1 - d2, mu, nu, k, n);
                            if (c == 0) continue;
                            rhs += left * cyl(nu, d2, beta.parts()) * TPoly(c);
                        }
                    }
            rep.checked++;
            if (!(lhs == rhs)) {
                rep.pass = false;
                std::ostringstream os;
                os << "alpha=" << alpha.to_string() << " beta=" << beta.to_string()
                   << " lhs=" << lhs.to_string() << " rhs=" << rhs.to_string();
                rep.witness = os.str();
                return rep;
            }
        }
    return rep;
}

}  // namespace cylhecke
