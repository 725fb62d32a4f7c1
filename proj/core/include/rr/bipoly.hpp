/**
 * @file bipoly.hpp
 * @brief Sparse bivariate polynomials over F_p and the elimination kernels
 *        built on them (shear substitution, resultants, first subresultants,
 *        evaluation of polynomial pairs modulo a univariate modulus).
 *
 * A BiPoly is a term list in two variables.  For curve equations the
 * variables are (X, Y); the shear substitution produces polynomials in
 * (S, Y) where S is the primitive-element coordinate, stored in the same
 * structure with `ex` meaning the S-exponent.
 */
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rr/field.hpp"
#include "rr/upoly.hpp"

namespace rr {

struct BiTerm {
    std::uint32_t ex = 0, ey = 0;  // exponents of X (or S) and Y
    std::uint64_t c = 0;

    bool operator==(const BiTerm& o) const {
        return ex == o.ex && ey == o.ey && c == o.c;
    }
};

/// Terms are kept sorted by (ex, ey), coefficients nonzero.
struct BiPoly {
    std::vector<BiTerm> terms;

    bool operator==(const BiPoly& o) const { return terms == o.terms; }
};

namespace bp {

/// Sorts, merges duplicate exponent pairs and drops zero coefficients.
BiPoly normalize(const Field& F, std::vector<BiTerm> terms);
inline BiPoly zero() { return BiPoly{}; }
BiPoly constant(std::uint64_t a);
BiPoly monomial(std::uint64_t a, std::uint32_t ex, std::uint32_t ey);

inline bool is_zero(const BiPoly& f) { return f.terms.empty(); }
int total_deg(const BiPoly& f);  // -1 for zero
int x_deg(const BiPoly& f);
int y_deg(const BiPoly& f);
/// Coefficient of X^ex Y^ey.
std::uint64_t coeff(const BiPoly& f, std::uint32_t ex, std::uint32_t ey);

BiPoly add(const Field& F, const BiPoly& a, const BiPoly& b);
BiPoly scale(const Field& F, const BiPoly& a, std::uint64_t k);

std::uint64_t eval(const Field& F, const BiPoly& f, std::uint64_t x,
                   std::uint64_t y);
BiPoly partial_x(const Field& F, const BiPoly& f);
BiPoly partial_y(const Field& F, const BiPoly& f);

/// True when deg_Y(f) equals the total degree and the Y^deg coefficient is a
/// nonzero constant (projective Noether position for the curve it defines).
bool is_noether_position(const BiPoly& f);

/// f viewed as a polynomial in Y with UPoly coefficients in the first
/// variable; index = Y-exponent.
std::vector<UPoly> y_coeffs(const BiPoly& f);
BiPoly from_y_coeffs(const Field& F, const std::vector<UPoly>& yc);

/// Shear substitution: lambda^{deg f} * f((S - Y)/lambda, Y) with lambda != 0.
/// The scaling clears all denominators, so the result has polynomial
/// coefficients; it changes resultants and subresultants only by nonzero
/// scalar factors, which every caller normalizes away.
BiPoly shear(const Field& F, const BiPoly& f, std::uint64_t lambda);

/// f(u(S), v(S)) mod chi.  By convention the result is 0 when chi = 1 (the
/// quotient ring is trivial).  Powers u^i v^j are enumerated in increasing
/// lexicographic (i, j) order so each step costs one modular multiplication.
UPoly eval_pair_mod(const Field& F, const BiPoly& f, const UPoly& u,
                    const UPoly& v, const UPoly& chi);

/// Monomials (i, j) with i + j <= d and j < y_cap, ordered by total degree
/// and, within a degree, by descending Y-exponent: 1; X, Y ... becomes
/// (0,0); (1,0), (0,1); (2,0), (1,1), (0,2); ...
std::vector<std::pair<int, int>> monomials_upto(int d, int y_cap);

/// u^i v^j mod chi for every monomial in `mons`, sharing one power ladder.
std::vector<UPoly> monomial_values_mod(const Field& F,
                                       const std::vector<std::pair<int, int>>& mons,
                                       const UPoly& u, const UPoly& v,
                                       const UPoly& chi);

/// Behavior when F_p has fewer good evaluation points than the degree bound
/// needs: raise InsufficientFieldError, or fall back to an exact
/// fraction-free (Bareiss) determinant over F_p[S].
enum class SmallFieldPolicy { raise_error, exact_fallback };

/// Resultant of A and B with respect to Y (Sylvester determinant over
/// F_p[S], no monic normalization).  Computed by evaluation/interpolation at
/// points where neither leading Y-coefficient vanishes.  Both inputs must be
/// nonzero.
UPoly resultant_y(const Field& F, const BiPoly& A, const BiPoly& B,
                  SmallFieldPolicy policy = SmallFieldPolicy::raise_error);

/// First subresultant S_1(A, B) = a0(S) + Y * a1(S) in the determinantal
/// (Sylvester minor) normalization.  Requires deg_Y A, deg_Y B >= 1 and
/// deg_Y A + deg_Y B >= 3.
std::pair<UPoly, UPoly> first_subresultant_y(
    const Field& F, const BiPoly& A, const BiPoly& B,
    SmallFieldPolicy policy = SmallFieldPolicy::raise_error);

/// Resultant and first subresultant from one shared evaluation pass; used by
/// the principal-divisor computation where both are needed for the same pair.
struct EliminationData {
    UPoly res;       // S_0
    UPoly s1_const;  // a0
    UPoly s1_lin;    // a1
};
EliminationData elimination_data(const Field& F, const BiPoly& A,
                                 const BiPoly& B, SmallFieldPolicy policy);

/// One term per line, "i j c", in storage order.
std::string to_string(const BiPoly& f);

}  // namespace bp
}  // namespace rr
