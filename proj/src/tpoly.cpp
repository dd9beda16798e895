#include "cylhecke/tpoly.hpp"

#include <sstream>

namespace cylhecke {

TPoly TPoly::divide_exact(const TPoly& d) const {
    if (d.is_zero()) throw std::domain_error("TPoly: division by zero");
    TPoly rem = *this, quot;
    const int dd = d.degree();
    const long long lead = d.coef_.rbegin()->second;
    while (!rem.is_zero() && rem.degree() - rem.low_degree() >= dd - d.low_degree()) {
        long long top = rem.coef_.rbegin()->second;
        if (top % lead != 0)
            throw std::domain_error("TPoly: inexact division of " + to_string() + " by " + d.to_string());
        int e = rem.degree() - dd;
        long long q = top / lead;
        quot.add_term(e, q);
        rem -= TPoly::term(q, e) * d;
    }
    if (!rem.is_zero())
        throw std::domain_error("TPoly: inexact division of " + to_string() + " by " + d.to_string());
    return quot;
}

std::string TPoly::to_string() const {
    if (coef_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
        long long c = it->second;
        int e = it->first;
        if (c > 0 && !first) os << '+';
        if (c < 0) {
            os << '-';
            c = -c;
        }
        if (c != 1 || e == 0) os << c;
        if (e != 0) {
            os << 't';
            if (e != 1) os << '^' << e;
        }
        first = false;
    }
    return os.str();
}

}  // namespace cylhecke
