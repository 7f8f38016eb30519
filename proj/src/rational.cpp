#include "qext/rational.hpp"

#include <cstdlib>

namespace qext {

namespace {

std::int64_t checked_narrow(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("rational arithmetic overflow");
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) fail(Errc::BadExponent, "rational with zero denominator (use Rational::infinity)");
    normalize();
}

void Rational::normalize() {
    if (den_ == 0) {
        num_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rational Rational::reciprocal() const {
    if (is_infinite()) return Rational(0);
    if (num_ == 0) return infinity();
    Rational r;
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? -num_ : num_;
    return r;
}

Rational Rational::operator-() const {
    if (is_infinite()) fail(Errc::BadExponent, "negating infinity");
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (is_infinite() || o.is_infinite()) fail(Errc::BadExponent, "adding infinity");
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    num_ = checked_narrow(n);
    den_ = checked_narrow(d);
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    if (o.is_infinite()) fail(Errc::BadExponent, "subtracting infinity");
    return *this += Rational(-o.num_, o.den_);
}

Rational& Rational::operator*=(const Rational& o) {
    if (is_infinite() || o.is_infinite()) fail(Errc::BadExponent, "multiplying infinity");
    // Cross-reduce before the products to keep intermediates small.
    std::int64_t a = num_, b = den_, c = o.num_, d = o.den_;
    std::int64_t g1 = std::gcd(a < 0 ? -a : a, d);
    std::int64_t g2 = std::gcd(c < 0 ? -c : c, b);
    a /= g1;
    d /= g1;
    c /= g2;
    b /= g2;
    num_ = checked_narrow(static_cast<__int128>(a) * c);
    den_ = checked_narrow(static_cast<__int128>(b) * d);
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0 && !o.is_infinite()) fail(Errc::BadExponent, "dividing by zero");
    return *this *= o.reciprocal();
}

bool operator<(const Rational& a, const Rational& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::str() const {
    if (is_infinite()) return "inf";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    if (text == "inf" || text == "oo") return infinity();
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text));
        std::int64_t n = std::stoll(text.substr(0, slash));
        std::int64_t d = std::stoll(text.substr(slash + 1));
        return Rational(n, d);
    } catch (const std::logic_error&) {
        fail(Errc::ConfigError, "cannot parse rational '" + text + "'");
    }
}

}  // namespace qext
