#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cylhecke {

// Exact rational over 64-bit integers with overflow-checked arithmetic.
// Desk-scale computations never approach the limits; the checks turn a
// silent wrap into a hard failure.
class Frac {
public:
    Frac() : num_(0), den_(1) {}
    Frac(long long n) : num_(n), den_(1) {}
    Frac(long long n, long long d) : num_(n), den_(d) { reduce(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    long long as_integer() const {
        if (den_ != 1) throw std::domain_error("Frac: not an integer: " + to_string());
        return num_;
    }

    friend Frac operator+(const Frac& a, const Frac& b) {
        return Frac(checked(static_cast<__int128>(a.num_) * b.den_ +
                            static_cast<__int128>(b.num_) * a.den_),
                    checked(static_cast<__int128>(a.den_) * b.den_));
    }
    friend Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return Frac(checked(static_cast<__int128>(a.num_) * b.num_),
                    checked(static_cast<__int128>(a.den_) * b.den_));
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.num_ == 0) throw std::domain_error("Frac: division by zero");
        return Frac(checked(static_cast<__int128>(a.num_) * b.den_),
                    checked(static_cast<__int128>(a.den_) * b.num_));
    }
    Frac operator-() const {
        Frac r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Frac& operator+=(const Frac& o) { return *this = *this + o; }
    Frac& operator-=(const Frac& o) { return *this = *this - o; }
    Frac& operator*=(const Frac& o) { return *this = *this * o; }
    Frac& operator/=(const Frac& o) { return *this = *this / o; }

    bool operator==(const Frac& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Frac& o) const { return !(*this == o); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string to_string() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    static long long checked(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Frac: 64-bit overflow");
        return static_cast<long long>(v);
    }
    void reduce() {
        if (den_ == 0) throw std::domain_error("Frac: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num_, den_;
};

}  // namespace cylhecke
