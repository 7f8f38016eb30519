#include "qext/expsums.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace qext {

namespace {

SumValue finish_sum(Complex value, double bound) {
    SumValue s;
    s.value = value;
    s.magnitude = std::abs(value);
    s.bound = bound;
    s.ratio = std::isinf(bound) ? 0.0 : s.magnitude / bound;
    return s;
}

}  // namespace

SumValue gauss_sum(const PrimeField& f, std::int64_t a, int k) {
    if (f.reduce(a) == 0) fail(Errc::ZeroCoefficient, "gauss_sum needs a != 0");
    if (k < 1) fail(Errc::BadExponent, "gauss_sum needs k >= 1");
    Complex acc(0.0, 0.0);
    bool odd = (k % 2) != 0;
    for (std::int64_t t = 1; t < f.q(); ++t) {
        double sign = odd ? static_cast<double>(f.psi(t)) : 1.0;
        acc += sign * f.chi(f.mul(a, t));
    }
    double bound = odd ? std::sqrt(static_cast<double>(f.q())) : 1.0;
    return finish_sum(acc, bound);
}

SumValue salie_sum(const PrimeField& f, std::int64_t a, std::int64_t b) {
    Complex acc(0.0, 0.0);
    std::int64_t ar = f.reduce(a), br = f.reduce(b);
    for (std::int64_t t = 1; t < f.q(); ++t) {
        std::int64_t arg = f.add(f.mul(ar, t), f.mul(br, f.inv(t)));
        acc += static_cast<double>(f.psi(t)) * f.chi(arg);
    }
    return finish_sum(acc, kWeilConstant * std::sqrt(static_cast<double>(f.q())));
}

SumValue kloosterman_sum(const PrimeField& f, std::int64_t a, std::int64_t b) {
    Complex acc(0.0, 0.0);
    std::int64_t ar = f.reduce(a), br = f.reduce(b);
    for (std::int64_t t = 1; t < f.q(); ++t) {
        acc += f.chi(f.add(f.mul(ar, t), f.mul(br, f.inv(t))));
    }
    double bound = (ar == 0 && br == 0) ? std::numeric_limits<double>::infinity()
                                        : kWeilConstant * std::sqrt(static_cast<double>(f.q()));
    return finish_sum(acc, bound);
}

BoundReport power_sum_identity_check(const PrimeField& f, std::int64_t t, int n) {
    std::int64_t tr = f.reduce(t);
    if (tr == 0) fail(Errc::ZeroCoefficient, "power_sum_identity_check needs t != 0");
    if (n < 2) fail(Errc::BadExponent, "power_sum_identity_check needs n >= 2");

    Complex lhs(0.0, 0.0);
    for (std::int64_t s = 0; s < f.q(); ++s) {
        lhs += f.chi(f.mul(tr, f.pow(s, n)));
    }

    // psi_h of order h built on the smallest primitive root g:
    // psi_h(g^i) = exp(2*pi*i_unit * i / h).
    std::int64_t h = std::gcd(static_cast<std::int64_t>(n), f.q() - 1);
    auto psi_h_pow = [&](std::int64_t x, std::int64_t k) {
        // psi_h^k(x) for x != 0; k may be negative.
        std::int64_t e = (f.dlog(x) * k % h + h) % h;
        double angle = 6.283185307179586476925286766559 * static_cast<double>(e) /
                       static_cast<double>(h);
        return Complex(std::cos(angle), std::sin(angle));
    };
    Complex rhs(0.0, 0.0);
    for (std::int64_t k = 1; k < h; ++k) {
        Complex gauss(0.0, 0.0);
        for (std::int64_t s = 1; s < f.q(); ++s) {
            gauss += psi_h_pow(s, k) * f.chi(s);
        }
        rhs += psi_h_pow(tr, -k) * gauss;
    }

    BoundReport report;
    report.check = "power-sum-identity";
    report.q = f.q();
    report.family = "n=" + std::to_string(n);
    report.witness = "t=" + std::to_string(tr) + ";n=" + std::to_string(n) +
                     ";h=" + std::to_string(h);
    report.value = std::abs(lhs - rhs);
    report.bound = 1e-9 * static_cast<double>(f.q());
    return finish_report(report);
}

}  // namespace qext
