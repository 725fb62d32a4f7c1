/**
 * @file field.hpp
 * @brief Prime-field arithmetic context F_p for odd primes p < 2^62.
 *
 * Elements are plain uint64_t values in [0, p).  All containers (polynomials,
 * matrices) store raw values; operations take the Field context explicitly, so
 * one process can work with several primes at once.
 */
#pragma once

#include <cstdint>

#include "rr/errors.hpp"

namespace rr {

/// Deterministic Miller-Rabin primality test, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

class Field {
public:
    /// Validates that `p` is an odd prime below 2^62.
    explicit Field(std::uint64_t p);

    std::uint64_t p() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;  // a,b < 2^62, no overflow
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + (p_ - b);
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(a) * b % p_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    /// Multiplicative inverse; throws Error on zero.
    std::uint64_t inv(std::uint64_t a) const;
    /// Canonical representative of a signed integer.
    std::uint64_t from_int(long long x) const {
        long long r = x % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<std::uint64_t>(r);
    }

    bool operator==(const Field& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_;
};

}  // namespace rr
