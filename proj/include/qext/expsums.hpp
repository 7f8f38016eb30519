#pragma once

#include <cstdint>

#include "qext/field.hpp"
#include "qext/report.hpp"

namespace qext {

/// One evaluated exponential sum together with the classical ceiling on its
/// magnitude. `ratio` is magnitude/bound, 0 when no bound applies.
struct SumValue {
    Complex value;
    double magnitude;
    double bound;
    double ratio;
};

/// Weil constant adopted for the Kloosterman/Salie ceilings 2*sqrt(q).
inline constexpr double kWeilConstant = 2.0;

/// sum_{t != 0} chi(a*t) * psi(t)^k. For odd k the magnitude is exactly
/// sqrt(q); for even k the character power is trivial and the sum collapses
/// to -1. Requires a != 0.
SumValue gauss_sum(const PrimeField& f, std::int64_t a, int k = 1);

/// Twisted Kloosterman sum sum_{t != 0} psi(t) * chi(a*t + b*t^-1),
/// bounded by 2*sqrt(q).
SumValue salie_sum(const PrimeField& f, std::int64_t a, std::int64_t b);

/// sum_{t != 0} chi(a*t + b*t^-1), bounded by 2*sqrt(q) for (a,b) != (0,0).
/// At (0,0) every term is 1 and the bound is reported as +inf.
SumValue kloosterman_sum(const PrimeField& f, std::int64_t a, std::int64_t b);

/// Checks the reduction of sum_{s in F_q} chi(t*s^n) to Gauss sums of a
/// multiplicative character of order h = gcd(n, q-1):
///     LHS = sum_{k=1}^{h-1} psi_h^{-k}(t) * G(psi_h^k, chi).
/// Returns a report with value = |LHS - RHS| against bound 1e-9*q.
BoundReport power_sum_identity_check(const PrimeField& f, std::int64_t t, int n);

}  // namespace qext
