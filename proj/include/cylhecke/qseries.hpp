#pragma once

#include <sstream>
#include <stdexcept>
#include <vector>

#include "cylhecke/tpoly.hpp"

namespace cylhecke {

// Polynomial in the quantum parameter q, truncated above a fixed degree cap,
// with TPoly coefficients. Degrees at or below the cap are exact.
class QSeries {
public:
    explicit QSeries(int cap) : cap_(cap), coef_(cap + 1) {}
    QSeries(int cap, const TPoly& c0) : QSeries(cap) {
        if (cap_ >= 0) coef_[0] = c0;
    }

    static QSeries q_term(int cap, int d, const TPoly& c) {
        QSeries s(cap);
        if (d <= cap && d >= 0) s.coef_[d] = c;
        return s;
    }

    int cap() const { return cap_; }
    const TPoly& coefficient(int d) const {
        static const TPoly zero;
        return d >= 0 && d <= cap_ ? coef_[d] : zero;
    }
    bool is_zero() const {
        for (auto& c : coef_)
            if (!c.is_zero()) return false;
        return true;
    }
    // q-degrees with nonzero coefficient
    std::vector<int> support() const {
        std::vector<int> s;
        for (int d = 0; d <= cap_; ++d)
            if (!coef_[d].is_zero()) s.push_back(d);
        return s;
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        QSeries r(std::max(a.cap_, b.cap_));
        for (int d = 0; d <= r.cap_; ++d) r.coef_[d] = a.coefficient(d) + b.coefficient(d);
        return r;
    }
    friend QSeries operator-(const QSeries& a, const QSeries& b) {
        QSeries r(std::max(a.cap_, b.cap_));
        for (int d = 0; d <= r.cap_; ++d) r.coef_[d] = a.coefficient(d) - b.coefficient(d);
        return r;
    }
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        QSeries r(std::max(a.cap_, b.cap_));
        for (int da = 0; da <= a.cap_; ++da) {
            if (a.coef_[da].is_zero()) continue;
            for (int db = 0; db + da <= r.cap_ && db <= b.cap_; ++db)
                r.coef_[da + db] += a.coef_[da] * b.coefficient(db);
        }
        return r;
    }
    friend QSeries operator*(const QSeries& a, const TPoly& c) {
        QSeries r(a.cap_);
        for (int d = 0; d <= a.cap_; ++d) r.coef_[d] = a.coef_[d] * c;
        return r;
    }
    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
    QSeries& operator-=(const QSeries& o) { return *this = *this - o; }
    QSeries& operator*=(const TPoly& c) { return *this = *this * c; }

    // multiply by q^d (dropping degrees above the cap)
    QSeries q_shift(int d) const {
        QSeries r(cap_);
        for (int e = 0; e + d <= cap_; ++e)
            if (e + d >= 0) r.coef_[e + d] = coef_[e];
        return r;
    }

    QSeries divide_exact(const TPoly& d) const {
        QSeries r(cap_);
        for (int e = 0; e <= cap_; ++e) r.coef_[e] = coef_[e].divide_exact(d);
        return r;
    }

    bool operator==(const QSeries& o) const {
        int top = std::max(cap_, o.cap_);
        for (int d = 0; d <= top; ++d)
            if (!(coefficient(d) == o.coefficient(d))) return false;
        return true;
    }
    bool operator!=(const QSeries& o) const { return !(*this == o); }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (int d = 0; d <= cap_; ++d) {
            if (coef_[d].is_zero()) continue;
            if (!first) os << " + ";
            os << '(' << coef_[d].to_string() << ')';
            if (d > 0) os << "q^" << d;
            first = false;
        }
        return first ? "0" : os.str();
    }

private:
    int cap_;
    std::vector<TPoly> coef_;
};

}  // namespace cylhecke
