#include "rr/rrspace.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "rr/errors.hpp"
#include "rr/linalg.hpp"

namespace rr {

namespace {

UPoly s_poly() { return up::monomial(1, 1); }

UPoly etale_poly(const Curve& C, std::uint64_t lambda, const UPoly& u,
                 const UPoly& v, const UPoly& chi) {
    UPoly gx = bp::eval_pair_mod(C.F, C.qx, u, v, chi);
    UPoly gy = bp::eval_pair_mod(C.F, C.qy, u, v, chi);
    return up::rem(C.F, up::sub(C.F, gx, up::scale(C.F, gy, lambda)), chi);
}

// Stacked vanishing conditions: one block of rows per divisor, one column per
// monomial X^i Y^j with i + j <= d and j < deg(C); entry rows are the
// coefficients of the monomial reduced on the divisor's parametrization.
struct VanishBlock {
    const UPoly* u;
    const UPoly* v;
    const UPoly* chi;
};

std::vector<BiPoly> vanishing_basis(const Curve& C,
                                    const std::vector<VanishBlock>& blocks,
                                    int d) {
    const Field& F = C.F;
    auto mons = bp::monomials_upto(d, C.deg);
    std::size_t rows = 0;
    for (const auto& b : blocks) rows += static_cast<std::size_t>(
        std::max(up::deg(*b.chi), 0));
    Mat M = Mat::zero(rows, mons.size());
    std::size_t row0 = 0;
    for (const auto& b : blocks) {
        int m = up::deg(*b.chi);
        if (m <= 0) continue;
        auto vals = bp::monomial_values_mod(F, mons, *b.u, *b.v, *b.chi);
        for (std::size_t k = 0; k < mons.size(); ++k)
            for (int i = 0; i < m; ++i)
                M.at(row0 + i, k) =
                    i < static_cast<int>(vals[k].c.size()) ? vals[k].c[i] : 0;
        row0 += m;
    }
    auto ker = la::kernel_basis(F, M);
    std::vector<BiPoly> out;
    out.reserve(ker.size());
    for (const auto& w : ker) {
        std::vector<BiTerm> terms;
        for (std::size_t k = 0; k < mons.size(); ++k)
            if (w[k])
                terms.push_back(
                    BiTerm{static_cast<std::uint32_t>(mons[k].first),
                           static_cast<std::uint32_t>(mons[k].second), w[k]});
        out.push_back(bp::normalize(F, std::move(terms)));
    }
    return out;
}

long long isqrt_ll(long long n) {
    if (n < 0) return 0;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

long long interpolation_degree(int delta, long long w) {
    long long dl = delta;
    if (dl * (dl + 1) / 2 <= w)
        return (2 * w + dl * (dl - 1)) / (2 * dl);
    long long t = isqrt_ll(1 + 8 * w);
    return (t - 1) / 2;
}

long long form_space_dimension(int delta, long long d) {
    if (d < 0) return 0;
    if (d < delta) return (d + 1) * (d + 2) / 2;
    long long dl = delta;
    return dl * (d + 1) - dl * (dl - 1) / 2;
}

InterpolationResult interpolate(const Curve& C, const SmoothDivisor& d_plus,
                                Rng& rng, const RandomConfig& cfg,
                                int extra_degree) {
    if (auto why = validate_divisor(C, d_plus))
        throw ValidationError("interpolate: invalid divisor: " + *why);
    const Field& F = C.F;
    long long w = up::deg(d_plus.chi) + node_count(C);
    long long d = interpolation_degree(C.deg, w) + std::max(extra_degree, 0);
    std::vector<VanishBlock> blocks{{&d_plus.u, &d_plus.v, &d_plus.chi},
                                    {&C.nodes.u, &C.nodes.v, &C.nodes.chi}};
    auto kernel = vanishing_basis(C, blocks, static_cast<int>(d));
    if (kernel.empty())
        throw Error("interpolation kernel is empty; degree bound too small");
    // Random nonzero combination of the kernel.  If the sample set is the
    // degenerate singleton {0} we fall back to the first basis element.
    BiPoly h;
    for (int attempt = 0; attempt < std::max(cfg.retry_budget, 1); ++attempt) {
        h = bp::zero();
        for (const auto& b : kernel)
            h = bp::add(F, h, bp::scale(F, b, draw_sample(rng, cfg, F.p())));
        if (!bp::is_zero(h)) break;
    }
    if (bp::is_zero(h)) h = kernel.front();
    return InterpolationResult{h, kernel, static_cast<int>(d)};
}

PrincDivData comp_princ_div_data(const Curve& C, const BiPoly& h, Rng& rng,
                                 const RandomConfig& cfg) {
    const Field& F = C.F;
    if (bp::is_zero(h)) throw ValidationError("form is zero");
    int delta = C.deg;
    int r = node_count(C);
    int e = bp::total_deg(h);
    if (r > 0 &&
        !up::is_zero(bp::eval_pair_mod(F, h, C.nodes.u, C.nodes.v, C.nodes.chi)))
        throw ValidationError("form does not vanish on the nodes");
    if (e == 0) return PrincDivData{zero_divisor(0), 0, up::one(), up::one()};

    int mature = 0;          // attempts that reached the resultant stage
    int node_incidence = 0;  // of those, failures where (h)-E met a node
    // After the random budget, small fields get a deterministic sweep of all
    // remaining directions: with few candidates, sampling with replacement
    // can miss the workable ones.
    long long sweep = F.p() <= 257 ? static_cast<long long>(F.p()) - 1 : 0;
    for (long long attempt = 0; attempt < cfg.retry_budget + sweep; ++attempt) {
        std::uint64_t lam = attempt < cfg.retry_budget
                                ? draw_sample(rng, cfg, F.p())
                                : static_cast<std::uint64_t>(
                                      attempt - cfg.retry_budget + 1);
        if (lam == 0) continue;
        if (up::eval(F, C.nodes.tangent_poly, lam) == 0) continue;
        BiPoly A = bp::shear(F, C.q, lam);
        // Nonzero constant Y^delta coefficient <=> the direction point
        // (1 : -lambda : 0) misses the curve; keeps the resultant degree
        // test exact.
        if (bp::coeff(A, 0, static_cast<std::uint32_t>(delta)) == 0) continue;
        UPoly chi_nodes = up::one();
        NodalDivisor nodes_lam;
        if (r > 0) {
            auto nl = change_prim_elt_nodal(F, C.nodes, lam);
            if (!nl) continue;
            nodes_lam = *nl;
            chi_nodes = nodes_lam.chi;
        }
        BiPoly B = bp::shear(F, h, lam);
        int nB = bp::y_deg(B);
        UPoly chi_raw;
        UPoly a0, a1;
        bool have_s1 = false;
        if (nB == 0) {
            // B is a polynomial in the primitive element only; every root
            // gives a whole fiber, so this direction cannot separate points.
            // The resultant is still available for the degree test.
            UPoly b0 = bp::y_coeffs(B)[0];
            chi_raw = up::one();
            for (int i = 0; i < delta; ++i) chi_raw = up::mul(F, chi_raw, b0);
        } else {
            auto elim = bp::elimination_data(
                F, A, B, bp::SmallFieldPolicy::exact_fallback);
            chi_raw = elim.res;
            a0 = elim.s1_const;
            a1 = elim.s1_lin;
            have_s1 = true;
        }
        if (up::deg(chi_raw) <
            static_cast<long long>(delta) * e)
            throw ZerosAtInfinityError(
                "form vanishes at infinity on the curve");
        ++mature;
        UPoly chi_tilde = up::monic(F, chi_raw);
        UPoly sq = up::mul(F, chi_nodes, chi_nodes);
        auto [chi, remn] = up::divrem(F, chi_tilde, sq);
        if (!up::is_zero(remn)) continue;  // adjoint factor misaligned; redraw
        if (up::deg(chi) == 0)
            return PrincDivData{zero_divisor(lam), lam, chi_tilde, chi_nodes};
        if (!up::is_one(up::gcd(F, chi, chi_nodes))) {
            ++node_incidence;  // (h) - E meets a node along this direction
            continue;
        }
        if (!have_s1) continue;  // direction cannot separate; redraw
        UPoly a1m = up::rem(F, a1, chi);
        if (!up::is_one(up::gcd(F, a1m, chi))) continue;  // fiber collision
        UPoly v = up::rem(
            F, up::neg(F, up::mulmod(F, up::rem(F, a0, chi),
                                     *up::invmod(F, a1m, chi), chi)),
            chi);
        UPoly u = up::rem(
            F, up::scale(F, up::sub(F, s_poly(), v), F.inv(lam)), chi);
        UPoly t = etale_poly(C, lam, u, v, chi);
        if (!up::is_one(up::gcd(F, t, chi))) {
            ++node_incidence;  // tangency that persists points at a branch
            continue;
        }
        SmoothDivisor D{lam, chi, u, v};
        if (validate_divisor(C, D)) continue;  // defensive
        return PrincDivData{D, lam, chi_tilde, chi_nodes};
    }
    if (mature > 0 && node_incidence == mature)
        throw AssumptionViolatedError(
            "the divisor of the form meets a singular point for every "
            "direction tried");
    throw RetryExhaustedError("comp_princ_div",
                              "no direction separated the divisor");
}

SmoothDivisor comp_princ_div(const Curve& C, const BiPoly& h, Rng& rng,
                             const RandomConfig& cfg) {
    return comp_princ_div_data(C, h, rng, cfg).divisor;
}

std::vector<BiPoly> numerator_basis(const Curve& C, const SmoothDivisor& d_num,
                                    int d) {
    if (auto why = validate_divisor(C, d_num))
        throw ValidationError("numerator_basis: invalid divisor: " + *why);
    std::vector<VanishBlock> blocks{{&d_num.u, &d_num.v, &d_num.chi},
                                    {&C.nodes.u, &C.nodes.v, &C.nodes.chi}};
    return vanishing_basis(C, blocks, d);
}

RRBasis riemann_roch_basis(const Curve& C, const SmoothDivisor& d_plus,
                           const SmoothDivisor& d_minus, Rng& rng,
                           const RandomConfig& cfg, int extra_degree) {
    const Field& F = C.F;
    if (auto why = validate_divisor(C, d_plus))
        throw ValidationError("D_plus invalid: " + *why);
    if (auto why = validate_divisor(C, d_minus))
        throw ValidationError("D_minus invalid: " + *why);
    SmoothDivisor Dp = d_plus, Dm = d_minus;
    if (!is_zero_divisor(Dp) && !is_zero_divisor(Dm)) {
        bool disjoint = Dp.lambda == Dm.lambda &&
                        up::is_one(up::gcd(F, Dp.chi, Dm.chi));
        if (!disjoint) {
            // Remove any common part so that D = D_plus - D_minus is in
            // lowest terms; both subtractions are exact multiset operations.
            SmoothDivisor p2 = subtract_divisors(C, Dp, Dm, rng, cfg);
            SmoothDivisor m2 = subtract_divisors(C, Dm, Dp, rng, cfg);
            Dp = p2;
            Dm = m2;
        }
    }
    if (divisor_degree(Dm) > divisor_degree(Dp))
        return RRBasis{bp::constant(1), {}, zero_divisor(), zero_divisor()};

    for (int attempt = 0; attempt < cfg.retry_budget; ++attempt) {
        InterpolationResult interp =
            interpolate(C, Dp, rng, cfg, extra_degree);
        PrincDivData pdd;
        try {
            pdd = comp_princ_div_data(C, interp.h, rng, cfg);
        } catch (const ZerosAtInfinityError&) {
            continue;  // redraw the form
        } catch (const RetryExhaustedError&) {
            continue;  // no direction separated this form; redraw it
        }
        SmoothDivisor d_res = subtract_divisors(C, pdd.divisor, Dp, rng, cfg);
        if (divisor_degree(d_res) !=
            divisor_degree(pdd.divisor) - divisor_degree(Dp))
            continue;  // form did not contain D_plus; defensive redraw
        SmoothDivisor d_num = add_divisors(C, d_res, Dm, rng, cfg);
        int dh = bp::total_deg(interp.h);
        auto numerators = numerator_basis(C, d_num, dh);
        return RRBasis{interp.h, std::move(numerators), pdd.divisor, d_num};
    }
    throw RetryExhaustedError("riemann_roch_basis",
                              "no interpolated form was usable");
}

CheckReport check_input_assumptions(const Curve& C,
                                    const SmoothDivisor& d_plus, Rng& rng,
                                    const RandomConfig& cfg,
                                    int extra_degree) {
    const Field& F = C.F;
    InterpolationResult interp = interpolate(C, d_plus, rng, cfg, extra_degree);
    CheckReport report;
    report.kernel_size = static_cast<int>(interp.kernel.size());
    if (node_count(C) == 0) {
        report.ok = true;
        return report;
    }
    int delta = C.deg;
    for (int attempt = 0; attempt < cfg.retry_budget; ++attempt) {
        std::uint64_t lam = draw_sample(rng, cfg, F.p());
        if (lam == 0) continue;
        if (up::eval(F, C.nodes.tangent_poly, lam) == 0) continue;
        BiPoly A = bp::shear(F, C.q, lam);
        if (bp::coeff(A, 0, static_cast<std::uint32_t>(delta)) == 0) continue;
        auto nl = change_prim_elt_nodal(F, C.nodes, lam);
        if (!nl) continue;
        const UPoly& chi_nodes = nl->chi;
        UPoly sq = up::mul(F, chi_nodes, chi_nodes);
        UPoly acc = chi_nodes;  // will become gcd of all incidence factors
        bool lam_ok = true;
        for (const auto& b : interp.kernel) {
            if (up::deg(acc) == 0) break;  // already certain
            BiPoly B = bp::shear(F, b, lam);
            UPoly chi_raw;
            if (bp::y_deg(B) == 0) {
                UPoly b0 = bp::y_coeffs(B)[0];
                chi_raw = up::one();
                for (int i = 0; i < delta; ++i)
                    chi_raw = up::mul(F, chi_raw, b0);
            } else {
                chi_raw = bp::resultant_y(
                    F, A, B, bp::SmallFieldPolicy::exact_fallback);
            }
            auto [chi, remn] = up::divrem(F, up::monic(F, chi_raw), sq);
            if (!up::is_zero(remn)) {
                lam_ok = false;  // misaligned adjoint factor; redraw direction
                break;
            }
            acc = up::gcd(F, acc, chi);
        }
        if (!lam_ok) continue;
        report.ok = up::deg(acc) == 0;
        report.blocking_factor = up::is_zero(acc) ? up::one() : acc;
        return report;
    }
    throw RetryExhaustedError("check_input_assumptions",
                              "no usable direction found");
}

NodalDivisor nodal_precompute(const Field& F, const BiPoly& q, Rng& rng,
                              const RandomConfig& cfg) {
    if (bp::is_zero(q)) throw ValidationError("curve polynomial is zero");
    int delta = bp::total_deg(q);
    if (delta < 2) throw ValidationError("curve degree must be at least 2");
    if (!bp::is_noether_position(q))
        throw ValidationError(
            "curve is not in projective Noether position: the coefficient of "
            "Y^deg(q) must be a nonzero constant");
    BiPoly qx = bp::partial_x(F, q);
    BiPoly qy = bp::partial_y(F, q);
    if (bp::is_zero(qx) && bp::is_zero(qy))
        throw ValidationError("curve polynomial is a p-th power");
    for (int attempt = 0; attempt < cfg.retry_budget; ++attempt) {
        std::uint64_t lam = draw_sample(rng, cfg, F.p());
        if (lam == 0) continue;
        BiPoly A = bp::shear(F, q, lam);
        if (bp::coeff(A, 0, static_cast<std::uint32_t>(delta)) == 0) continue;
        // Eliminate Y from {q = q_X = 0} and {q = q_Y = 0}; singular points
        // appear in both, so their primitive-element values divide the gcd.
        UPoly R1, R2;
        if (!bp::is_zero(qx)) {
            R1 = bp::resultant_y(F, A, bp::shear(F, qx, lam),
                                 bp::SmallFieldPolicy::exact_fallback);
            if (up::is_zero(R1))
                throw ValidationError(
                    "curve shares a factor with its X-derivative; it must be "
                    "squarefree");
        }
        if (!bp::is_zero(qy)) {
            R2 = bp::resultant_y(F, A, bp::shear(F, qy, lam),
                                 bp::SmallFieldPolicy::exact_fallback);
            if (up::is_zero(R2))
                throw ValidationError(
                    "curve shares a factor with its Y-derivative; it must be "
                    "squarefree");
        }
        UPoly G = up::gcd(F, R1, R2);
        if (up::deg(G) == 0)
            return make_curve(F, q, NodalDivisor{}).nodes;  // smooth curve
        UPoly chi = up::squarefree_part(F, G);
        // Recover the parametrization of the candidate points from the first
        // subresultant of (sheared q, sheared partial).
        BiPoly P2 = bp::is_zero(qx) ? bp::shear(F, qy, lam)
                                    : bp::shear(F, qx, lam);
        if (bp::y_deg(P2) < 1) continue;
        auto [a0, a1] = bp::first_subresultant_y(
            F, A, P2, bp::SmallFieldPolicy::exact_fallback);
        UPoly a1m = up::rem(F, a1, chi);
        if (!up::is_one(up::gcd(F, a1m, chi))) continue;  // fiber collision
        UPoly v = up::rem(
            F, up::neg(F, up::mulmod(F, up::rem(F, a0, chi),
                                     *up::invmod(F, a1m, chi), chi)),
            chi);
        UPoly u = up::rem(
            F, up::scale(F, up::sub(F, s_poly(), v), F.inv(lam)), chi);
        // Every candidate must be a genuine singular point; stray alignments
        // (a q = q_X point and a q = q_Y point sharing a fiber) fail here and
        // we redraw the direction.
        if (!up::is_zero(bp::eval_pair_mod(F, q, u, v, chi)) ||
            !up::is_zero(bp::eval_pair_mod(F, qx, u, v, chi)) ||
            !up::is_zero(bp::eval_pair_mod(F, qy, u, v, chi)))
            continue;
        NodalDivisor block{lam, chi, u, v, up::one()};
        block.tangent_poly = compute_tangent_poly(F, q, block);
        // make_curve re-validates everything (node nondegeneracy, infinity)
        // and throws ValidationError for curves that are not nodal.
        return make_curve(F, q, block).nodes;
    }
    throw RetryExhaustedError("nodal_precompute",
                              "no direction separated the singular points");
}

SmoothDivisor random_smooth_divisor(const Curve& C, int degree_hint, Rng& rng,
                                    const RandomConfig& cfg) {
    if (degree_hint < 1)
        throw ValidationError("degree hint must be at least 1");
    const Field& F = C.F;
    int r = node_count(C);
    int m = static_cast<int>(
        (degree_hint + 2 * r + C.deg - 1) / C.deg);
    if (m < 1) m = 1;
    // Forms of degree <= m through all nodes; the divisor (g) - E of such a
    // form g of exact degree m has degree delta*m - 2r >= degree_hint.
    std::vector<VanishBlock> blocks{{&C.nodes.u, &C.nodes.v, &C.nodes.chi}};
    auto kernel = vanishing_basis(C, blocks, m);
    if (kernel.empty()) throw Error("no forms through the nodes");
    for (int attempt = 0; attempt < cfg.retry_budget; ++attempt) {
        BiPoly g;
        for (const auto& b : kernel)
            g = bp::add(F, g, bp::scale(F, b, draw_sample(rng, cfg, F.p())));
        if (bp::total_deg(g) != m) continue;
        try {
            SmoothDivisor D = comp_princ_div(C, g, rng, cfg);
            if (divisor_degree(D) < degree_hint) continue;
            return D;
        } catch (const ZerosAtInfinityError&) {
            continue;
        } catch (const AssumptionViolatedError&) {
            continue;  // this particular form met a node; redraw
        } catch (const RetryExhaustedError&) {
            continue;  // inner direction search ran dry (small fields); redraw
        }
    }
    throw RetryExhaustedError("random_smooth_divisor",
                              "no random form produced a smooth divisor");
}

}  // namespace rr
