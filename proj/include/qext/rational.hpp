#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "qext/error.hpp"

namespace qext {

/// Exact rational number with a distinguished +infinity (denominator 0).
/// Used for Lebesgue exponents and the exponent arithmetic, where floating
/// point would blur exact endpoint identities.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d);

    static Rational infinity() {
        Rational r;
        r.num_ = 1;
        r.den_ = 0;
        return r;
    }

    bool is_infinite() const { return den_ == 0; }
    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const {
        if (is_infinite()) return std::numeric_limits<double>::infinity();
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// 1/x, with 1/inf = 0 and 1/0 = inf.
    Rational reciprocal() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    /// "3", "-4/3", or "inf".
    std::string str() const;
    static Rational parse(const std::string& text);

private:
    void normalize();

    std::int64_t num_;
    std::int64_t den_;  // > 0, or 0 for +infinity
};

}  // namespace qext
