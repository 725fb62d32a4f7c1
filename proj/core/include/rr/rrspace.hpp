/**
 * @file rrspace.hpp
 * @brief Riemann-Roch space computation on nodal plane curves: adjoint-aware
 *        interpolation, principal divisors of interpolated forms, numerator
 *        bases, the end-to-end basis pipeline, and curve precomputation
 *        (singular locus, random smooth divisors, input checking).
 *
 * For D = D_plus - D_minus the returned basis of L(D) is { b/h : b in B }
 * where h is an interpolated form through D_plus and the nodes, and B is a
 * basis of the forms of degree <= deg h that vanish on D_minus + ((h) - E -
 * D_plus) + E.  All divisors live on the affine chart and avoid the nodes;
 * forms vanishing at infinity are detected exactly and redrawn.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rr/divisor.hpp"
#include "rr/rng.hpp"

namespace rr {

/// Interpolation degree d for curve degree delta and constraint weight
/// w = deg(D_plus) + r: the smallest degree whose form space provably exceeds
/// w conditions (piecewise formula; exact integer arithmetic).
long long interpolation_degree(int delta, long long w);

/// dim { f : deg f <= d, deg_Y f < delta }, the column count of the
/// interpolation matrix.
long long form_space_dimension(int delta, long long d);

struct InterpolationResult {
    BiPoly h;                    // random nonzero kernel combination
    std::vector<BiPoly> kernel;  // full kernel basis b_1, ..., b_l
    int degree_bound = 0;        // the d that was used
};

/// Forms of degree <= interpolation_degree + extra_degree vanishing on
/// D_plus and on every node.  The kernel is never empty for valid inputs.
InterpolationResult interpolate(const Curve& C, const SmoothDivisor& d_plus,
                                Rng& rng, const RandomConfig& cfg,
                                int extra_degree = 0);

/// Intermediates of comp_princ_div, exposed for verification and tests.
struct PrincDivData {
    SmoothDivisor divisor;   // (h) - E restricted to the affine chart
    std::uint64_t lambda = 0;
    UPoly chi_resultant;     // monic resultant of the sheared pair
    UPoly chi_nodes;         // char poly of the nodes on the chosen lambda
};

/// Smooth affine part (h) - E of the divisor of the form h (which must
/// vanish on every node).  Las Vegas over the projection direction; throws
/// ZerosAtInfinityError (h vanishes at infinity on the curve; redraw h),
/// AssumptionViolatedError ((h) - E meets a node for every direction tried),
/// or RetryExhaustedError.
PrincDivData comp_princ_div_data(const Curve& C, const BiPoly& h, Rng& rng,
                                 const RandomConfig& cfg);
SmoothDivisor comp_princ_div(const Curve& C, const BiPoly& h, Rng& rng,
                             const RandomConfig& cfg);

/// Basis of { f : deg f <= d, deg_Y f < deg C, f vanishes on D_num + E }.
std::vector<BiPoly> numerator_basis(const Curve& C, const SmoothDivisor& d_num,
                                    int d);

struct RRBasis {
    BiPoly h;
    std::vector<BiPoly> numerators;  // basis of L(D) is { b/h }
    // Divisor data the downstream checks and the Jacobian layer need:
    SmoothDivisor div_h;    // (h) - E
    SmoothDivisor d_num;    // D_minus + ((h) - E - D_plus)
    int dimension() const { return static_cast<int>(numerators.size()); }
};

/// Basis of L(D_plus - D_minus).  Supports of D_plus and D_minus need not be
/// disjoint: a common part is removed by one subtract/subtract pass first.
/// Returns the empty basis (h = 1) when deg D_minus > deg D_plus.
RRBasis riemann_roch_basis(const Curve& C, const SmoothDivisor& d_plus,
                           const SmoothDivisor& d_minus, Rng& rng,
                           const RandomConfig& cfg, int extra_degree = 0);

/// Las Vegas verification that the instance satisfies the method's input
/// assumption: some interpolated form avoids every node outside E.  For each
/// node factor of chi_nodes we record which kernel forms meet it; the
/// assumption fails exactly when some factor blocks all of them.
struct CheckReport {
    bool ok = false;
    int kernel_size = 0;
    // Nonconstant gcd of all per-form incidence polynomials when !ok: the
    // node positions (as a factor of chi_nodes) that block every form.
    UPoly blocking_factor = up::one();
};
CheckReport check_input_assumptions(const Curve& C,
                                    const SmoothDivisor& d_plus, Rng& rng,
                                    const RandomConfig& cfg,
                                    int extra_degree = 0);

/// Singular-locus precomputation: eliminates {q = q_X = q_Y = 0} along a
/// random direction, recovers the parametrization by the subresultant trick,
/// validates it (all candidates are genuine nodes with nondegenerate tangent
/// cone), and computes the tangent polynomial.  Returns the empty nodal
/// divisor for smooth curves.  Throws ValidationError when the curve has a
/// singularity worse than a node (or one at infinity), RetryExhaustedError
/// when no direction separates the candidates.
NodalDivisor nodal_precompute(const Field& F, const BiPoly& q, Rng& rng,
                              const RandomConfig& cfg);

/// Random smooth effective divisor of degree >= degree_hint (exact degree
/// delta*m - 2r for the smallest workable m), obtained as (g) - E for a
/// random form g through the nodes.
SmoothDivisor random_smooth_divisor(const Curve& C, int degree_hint, Rng& rng,
                                    const RandomConfig& cfg);

}  // namespace rr
