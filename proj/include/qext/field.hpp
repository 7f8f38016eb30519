#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qext/error.hpp"

namespace qext {

using Complex = std::complex<double>;

/// Arithmetic substrate for F_q, q an odd prime.
///
/// The canonical additive character chi(t) = exp(2*pi*i*t/q), the quadratic
/// character psi (the Legendre symbol, extended by psi(0) = 0), inverses and
/// discrete logs are all precomputed at construction. Instances are immutable
/// afterwards and safe to share across threads.
class PrimeField {
public:
    explicit PrimeField(std::int64_t q);

    std::int64_t q() const { return q_; }

    /// Canonical residue in [0, q) of any signed value.
    std::int64_t reduce(std::int64_t v) const {
        std::int64_t r = v % q_;
        return r < 0 ? r + q_ : r;
    }

    std::int64_t add(std::int64_t a, std::int64_t b) const { return reduce(reduce(a) + reduce(b)); }
    std::int64_t sub(std::int64_t a, std::int64_t b) const { return reduce(reduce(a) - reduce(b)); }
    std::int64_t mul(std::int64_t a, std::int64_t b) const { return reduce(reduce(a) * reduce(b)); }
    std::int64_t neg(std::int64_t a) const { return reduce(-reduce(a)); }
    std::int64_t pow(std::int64_t base, std::int64_t e) const;

    /// Multiplicative inverse; throws ZeroInverse for t = 0 (mod q).
    std::int64_t inv(std::int64_t t) const {
        std::int64_t r = reduce(t);
        if (r == 0) fail(Errc::ZeroInverse, "0 has no inverse in F_" + std::to_string(q_));
        return inv_table_[static_cast<std::size_t>(r)];
    }

    /// chi(t) = exp(2*pi*i*t/q); accepts any signed t.
    Complex chi(std::int64_t t) const { return char_table_[static_cast<std::size_t>(reduce(t))]; }

    /// Legendre symbol in {-1, 0, +1}; psi(0) = 0.
    int psi(std::int64_t t) const { return legendre_table_[static_cast<std::size_t>(reduce(t))]; }

    /// Smallest generator of F_q^*.
    std::int64_t primitive_root() const { return primitive_root_; }

    /// Index of t with respect to the primitive root; requires t != 0.
    std::int64_t dlog(std::int64_t t) const {
        std::int64_t r = reduce(t);
        if (r == 0) fail(Errc::ZeroInverse, "dlog of 0");
        return dlog_table_[static_cast<std::size_t>(r)];
    }

    const std::vector<std::int64_t>& inv_table() const { return inv_table_; }
    const std::vector<int>& legendre_table() const { return legendre_table_; }
    const std::vector<Complex>& char_table() const { return char_table_; }

private:
    std::int64_t q_;
    std::int64_t primitive_root_;
    std::vector<std::int64_t> inv_table_;   // [0] is a 0 sentinel
    std::vector<int> legendre_table_;       // values in {-1, 0, +1}
    std::vector<Complex> char_table_;       // char_table_[t] = exp(2*pi*i*t/q)
    std::vector<std::int64_t> dlog_table_;  // [0] is a 0 sentinel
};

bool is_prime(std::int64_t n);

PrimeField make_field(std::int64_t q);

inline Complex chi(const PrimeField& f, std::int64_t t) { return f.chi(t); }
inline int psi(const PrimeField& f, std::int64_t t) { return f.psi(t); }
inline std::int64_t inv(const PrimeField& f, std::int64_t t) { return f.inv(t); }

}  // namespace qext
