#include "qext/field.hpp"

#include <cmath>

namespace qext {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t p = 3; p * p <= n; p += 2) {
        if (n % p == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::int64_t q) : q_(q) {
    if (q == 2) fail(Errc::EvenCharacteristic, "characteristic 2 is excluded");
    if (q < 2 || !is_prime(q)) fail(Errc::NotPrime, std::to_string(q) + " is not prime");

    std::size_t n = static_cast<std::size_t>(q);
    inv_table_.assign(n, 0);
    legendre_table_.assign(n, -1);
    char_table_.resize(n);
    dlog_table_.assign(n, 0);

    // inv[t] by the standard recurrence inv[t] = -(q/t) * inv[q mod t].
    inv_table_[1] = 1;
    for (std::size_t t = 2; t < n; ++t) {
        inv_table_[t] = reduce(-(q_ / static_cast<std::int64_t>(t)) *
                               inv_table_[static_cast<std::size_t>(q_ % static_cast<std::int64_t>(t))]);
    }

    // Legendre symbol: mark the (q-1)/2 nonzero squares.
    legendre_table_[0] = 0;
    for (std::int64_t s = 1; s < q_; ++s) {
        legendre_table_[static_cast<std::size_t>(mul(s, s))] = 1;
    }

    for (std::size_t t = 0; t < n; ++t) {
        double angle = kTwoPi * static_cast<double>(t) / static_cast<double>(q_);
        char_table_[t] = Complex(std::cos(angle), std::sin(angle));
    }

    // Smallest primitive root: g generates F_q^* iff g^((q-1)/p) != 1 for
    // every prime p dividing q-1.
    std::vector<std::int64_t> prime_factors;
    std::int64_t m = q_ - 1;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            prime_factors.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) prime_factors.push_back(m);

    primitive_root_ = 0;
    for (std::int64_t g = 2; g < q_; ++g) {
        bool generates = true;
        for (std::int64_t p : prime_factors) {
            if (pow(g, (q_ - 1) / p) == 1) {
                generates = false;
                break;
            }
        }
        if (generates) {
            primitive_root_ = g;
            break;
        }
    }

    std::int64_t acc = 1;
    for (std::int64_t e = 0; e < q_ - 1; ++e) {
        dlog_table_[static_cast<std::size_t>(acc)] = e;
        acc = mul(acc, primitive_root_);
    }
}

std::int64_t PrimeField::pow(std::int64_t base, std::int64_t e) const {
    std::int64_t b = reduce(base);
    std::int64_t result = 1;
    while (e > 0) {
        if (e & 1) result = mul(result, b);
        b = mul(b, b);
        e >>= 1;
    }
    return result;
}

PrimeField make_field(std::int64_t q) { return PrimeField(q); }

}  // namespace qext
