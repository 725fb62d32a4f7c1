/**
 * @file upoly.hpp
 * @brief Dense univariate polynomials over F_p.
 *
 * Coefficients are stored in ascending degree order with no trailing zeros;
 * the zero polynomial is the empty vector.  All operations take the Field
 * context explicitly.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rr/field.hpp"

namespace rr {

struct UPoly {
    std::vector<std::uint64_t> c;  // c[i] is the coefficient of S^i

    bool operator==(const UPoly& o) const { return c == o.c; }
};

namespace up {

UPoly from_coeffs(std::vector<std::uint64_t> c);  // trims trailing zeros
inline UPoly zero() { return UPoly{}; }
UPoly constant(std::uint64_t a);
inline UPoly one() { return constant(1); }
/// The monomial a * S^k.
UPoly monomial(std::uint64_t a, std::size_t k);

inline int deg(const UPoly& f) { return static_cast<int>(f.c.size()) - 1; }
inline bool is_zero(const UPoly& f) { return f.c.empty(); }
inline bool is_one(const UPoly& f) { return f.c.size() == 1 && f.c[0] == 1; }
/// Leading coefficient (0 for the zero polynomial).
inline std::uint64_t lc(const UPoly& f) { return f.c.empty() ? 0 : f.c.back(); }

UPoly add(const Field& F, const UPoly& a, const UPoly& b);
UPoly sub(const Field& F, const UPoly& a, const UPoly& b);
UPoly neg(const Field& F, const UPoly& a);
UPoly scale(const Field& F, const UPoly& a, std::uint64_t k);
/// Schoolbook below a fixed crossover, Karatsuba above it.
UPoly mul(const Field& F, const UPoly& a, const UPoly& b);
/// Multiply by S^k.
UPoly shift(const UPoly& a, std::size_t k);

/// Euclidean division; throws Error if b is zero.
std::pair<UPoly, UPoly> divrem(const Field& F, const UPoly& a, const UPoly& b);
UPoly rem(const Field& F, const UPoly& a, const UPoly& b);
UPoly quot(const Field& F, const UPoly& a, const UPoly& b);
/// Quotient when the division is known to be exact; throws Error otherwise.
UPoly exact_div(const Field& F, const UPoly& a, const UPoly& b);

UPoly monic(const Field& F, const UPoly& a);
/// Monic gcd (plain Euclidean remainder sequence); gcd(0,0) = 0.
UPoly gcd(const Field& F, const UPoly& a, const UPoly& b);
struct Xgcd {
    UPoly g, a, b;  // g monic, g = a*f + b*h
};
Xgcd xgcd(const Field& F, const UPoly& f, const UPoly& h);
/// Inverse of a modulo chi, or nullopt when gcd(a, chi) != 1.
std::optional<UPoly> invmod(const Field& F, const UPoly& a, const UPoly& chi);
UPoly mulmod(const Field& F, const UPoly& a, const UPoly& b, const UPoly& chi);
/// base^e mod chi by square-and-multiply.
UPoly powmod(const Field& F, const UPoly& base, std::uint64_t e, const UPoly& chi);

std::uint64_t eval(const Field& F, const UPoly& f, std::uint64_t x);
UPoly derivative(const Field& F, const UPoly& f);
/// Monic squarefree part f / gcd(f, f'), with the p-th power descent for the
/// f' = 0 case (valid over prime fields where c^(1/p) = c).
UPoly squarefree_part(const Field& F, const UPoly& f);
/// f(g) mod chi by Horner's rule in the quotient ring.
UPoly compose_mod(const Field& F, const UPoly& f, const UPoly& g,
                  const UPoly& chi);
/// Newton interpolation through distinct points xs.
UPoly interpolate_points(const Field& F,
                         const std::vector<std::uint64_t>& xs,
                         const std::vector<std::uint64_t>& ys);

/// Space-separated ascending coefficients; the zero polynomial prints as "0".
std::string to_string(const UPoly& f);
UPoly parse(const Field& F, const std::string& text);

}  // namespace up
}  // namespace rr
