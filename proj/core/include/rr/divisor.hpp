/**
 * @file divisor.hpp
 * @brief Curves with at worst ordinary double points, primitive-element
 *        representations of smooth effective divisors, and the divisor
 *        arithmetic built on them (primitive-element change, Hensel lifting,
 *        addition, subtraction, equality).
 *
 * A smooth effective divisor D on the affine chart of the curve is stored as
 * (lambda, chi, u, v): chi is the monic characteristic polynomial of the
 * primitive element s = lambda*x + y on the support of D (multiplicities
 * included), and u, v parametrize the points as x = u(s), y = v(s) mod chi.
 * The representation invariants are
 *   (H1) q(u, v) = 0 mod chi,
 *   (H2) lambda*u + v = S mod chi,
 *   (H3) gcd(q_X(u,v) - lambda*q_Y(u,v), chi) = 1,
 * with deg u, deg v < deg chi.  The zero divisor is (any lambda, 1, 0, 0).
 *
 * The singular locus of the curve is carried in the same shape plus the
 * tangent-direction polynomial T(lambda) whose roots are the slopes lambda
 * for which lambda*X + Y is tangent to a branch at some node.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "rr/bipoly.hpp"
#include "rr/field.hpp"
#include "rr/rng.hpp"
#include "rr/upoly.hpp"

namespace rr {

struct SmoothDivisor {
    std::uint64_t lambda = 0;
    UPoly chi = up::one();
    UPoly u;  // zero polynomial
    UPoly v;
};

/// Primitive-element data for the set of nodes; `chi` has degree r (number of
/// nodes), the divisor E of adjoint conditions has degree 2r.  `tangent_poly`
/// is monic and independent of the parametrizing lambda.
struct NodalDivisor {
    std::uint64_t lambda = 0;
    UPoly chi = up::one();
    UPoly u;
    UPoly v;
    UPoly tangent_poly = up::one();
};

struct Curve {
    Field F;
    BiPoly q;        // defining polynomial, irreducible, Noether position
    BiPoly qx, qy;   // cached partial derivatives
    int deg = 0;     // total degree (= deg_Y q)
    NodalDivisor nodes;
    long long genus = 0;
};

inline int divisor_degree(const SmoothDivisor& D) { return up::deg(D.chi); }
inline bool is_zero_divisor(const SmoothDivisor& D) {
    return up::deg(D.chi) == 0;
}
inline SmoothDivisor zero_divisor(std::uint64_t lambda = 0) {
    return SmoothDivisor{lambda, up::one(), up::zero(), up::zero()};
}
inline int node_count(const Curve& C) { return up::deg(C.nodes.chi); }

/// Genus of a degree-delta plane curve with r nodes: (delta-1)(delta-2)/2 - r.
long long genus_of(int delta, int r);

/// Tangent-direction polynomial: the monic generator of
/// Res_S(Q2(1, -lambda, S), chi_E(S)) where Q2 is the degree-2 part of
/// q(X + u_E, Y + v_E) over F_p[S]/chi_E.  Returns 1 when there are no nodes.
UPoly compute_tangent_poly(const Field& F, const BiPoly& q,
                           const NodalDivisor& nodes_without_tangent);

/// Full curve construction and validation: Noether position, degree >= 2,
/// odd p, nodal block invariants (nodes lie on the curve with both partials
/// vanishing, tangent cones nondegenerate, parametrization consistent),
/// no singular points at infinity, genus >= 0.  Throws ValidationError.
Curve make_curve(const Field& F, const BiPoly& q, const NodalDivisor& nodes);

/// First violated invariant of a smooth-divisor representation, or nullopt.
std::optional<std::string> validate_divisor(const Curve& C,
                                            const SmoothDivisor& D);

/// Extended Chinese remainder over F_p[S] (both moduli monic): the unique
/// w mod lcm(chi1, chi2) with w = u1 mod chi1 and w = u2 mod chi2, or nullopt
/// when u1 != u2 mod gcd(chi1, chi2).
std::optional<UPoly> xcrt(const Field& F, const UPoly& chi1, const UPoly& u1,
                          const UPoly& chi2, const UPoly& u2);

/// Rewrite D on the primitive element new_lambda*X + Y.  Returns nullopt when
/// new_lambda is unusable for D (projection not etale or not separating);
/// callers resample.
std::optional<SmoothDivisor> change_prim_elt(const Curve& C,
                                             const SmoothDivisor& D,
                                             std::uint64_t new_lambda);

/// Same primitive-element rewrite for the nodal data (the etale test is
/// skipped: nodes are singular, tangency is excluded by the tangent
/// polynomial instead).  Keeps tangent_poly.
std::optional<NodalDivisor> change_prim_elt_nodal(const Field& F,
                                                  const NodalDivisor& N,
                                                  std::uint64_t new_lambda);

/// One Newton/Hensel step: given divisor data (lambda, chi, u, v) valid
/// modulo chi and a target modulus chi_hat with chi_hat | chi^2, returns
/// (u_hat, v_hat) valid modulo chi_hat.  nullopt when the step denominator
/// q_X - lambda*q_Y is not invertible mod chi_hat (signals a bad lambda).
std::optional<std::pair<UPoly, UPoly>> hensel_step(const Curve& C,
                                                   std::uint64_t lambda,
                                                   const UPoly& u,
                                                   const UPoly& v,
                                                   const UPoly& chi_hat);

/// Multiset sum D1 + D2.  Las Vegas: draws a common primitive element, checks
/// parametrization compatibility, combines by CRT and lifts the product
/// modulus by one Hensel step.  Throws RetryExhaustedError.
SmoothDivisor add_divisors(const Curve& C, const SmoothDivisor& D1,
                           const SmoothDivisor& D2, Rng& rng,
                           const RandomConfig& cfg);

/// Positive part [D1 - D2]_+ of the multiset difference.
SmoothDivisor subtract_divisors(const Curve& C, const SmoothDivisor& D1,
                                const SmoothDivisor& D2, Rng& rng,
                                const RandomConfig& cfg);

/// Exact multiset equality (deterministic; no canonical form is needed).
bool equal_divisors(const Curve& C, const SmoothDivisor& D1,
                    const SmoothDivisor& D2);

/// Degree-1 divisor for an affine smooth point (x0, y0) using the given
/// lambda; nullopt when the representation invariants fail for that lambda.
std::optional<SmoothDivisor> point_divisor(const Curve& C, std::uint64_t x0,
                                           std::uint64_t y0,
                                           std::uint64_t lambda);

/// t-fold multiple t*P of a degree-1 divisor, built by a deterministic Hensel
/// ladder (no randomness needed: the primitive element of P keeps working).
SmoothDivisor n_fold_point(const Curve& C, const SmoothDivisor& P, int t);

}  // namespace rr
