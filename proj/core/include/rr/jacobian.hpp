/**
 * @file jacobian.hpp
 * @brief Group law on the degree-0 divisor class group of a smooth curve.
 *
 * Elements are classes [D - g*O] where D is a smooth effective affine divisor
 * of degree g (the genus) and O is a fixed affine base point.  Group
 * operations reduce through Riemann-Roch spaces: a function f = b/h in
 * L(D1 + D2 - g*O) moves D1 + D2 - g*O to the effective representative
 * D3 = D1 + D2 - g*O + (f).  Representatives are not canonical; equality is
 * the principality test dim L(D1 - D2) = 1.
 *
 * Only smooth curves (no nodes) are supported, and every representative must
 * stay away from infinity; sums whose canonical representative meets infinity
 * are detected (degree drop) and surfaced as errors after retries.
 */
#pragma once

#include <cstdint>

#include "rr/rrspace.hpp"

namespace rr {

struct JacobianContext {
    Curve C;
    SmoothDivisor base_point;   // O, degree 1
    SmoothDivisor neutral_rep;  // g * O
    SmoothDivisor double_rep;   // 2g * O (cached for negation)
};

struct JacobianElement {
    SmoothDivisor D;  // effective, degree = genus
};

/// Validates genus >= 1, no nodes, and that O is a valid degree-1 divisor.
JacobianContext make_jacobian(const Curve& C, const SmoothDivisor& base_point);

JacobianElement jac_neutral(const JacobianContext& J);

/// Wraps (and validates) an effective degree-g divisor as a group element.
JacobianElement jac_make(const JacobianContext& J, const SmoothDivisor& D);

JacobianElement jac_add(const JacobianContext& J, const JacobianElement& P1,
                        const JacobianElement& P2, Rng& rng,
                        const RandomConfig& cfg);

JacobianElement jac_neg(const JacobianContext& J, const JacobianElement& P,
                        Rng& rng, const RandomConfig& cfg);

bool jac_equals(const JacobianContext& J, const JacobianElement& P1,
                const JacobianElement& P2, Rng& rng, const RandomConfig& cfg);

/// Class of [D - deg(D)*O] for any smooth effective divisor D of degree >= g,
/// reduced to a degree-g representative.
JacobianElement jac_reduce(const JacobianContext& J, const SmoothDivisor& D,
                           Rng& rng, const RandomConfig& cfg);

/// Uniform-ish random element: a random smooth divisor reduced to degree g.
JacobianElement jac_random(const JacobianContext& J, Rng& rng,
                           const RandomConfig& cfg);

}  // namespace rr
