#include "rr/jacobian.hpp"

#include "rr/errors.hpp"

namespace rr {

namespace {

// Uniformly random affine rational point on C.  Draws x0 uniformly; the monic
// gcd(Y^p - Y, q(x0, Y)) collects exactly the rational roots of the fiber.
// Accepting a fiber with probability (#roots / deg C) before picking a root
// keeps the point uniform across all affine rational points.  Roots are
// isolated by scanning when p is small, by random quadratic-residue splits
// gcd((Y+a)^((p-1)/2) - 1, h) otherwise, each split branch chosen with
// probability proportional to its root count.
std::pair<std::uint64_t, std::uint64_t> random_point(const Curve& C, Rng& rng,
                                                     const RandomConfig& cfg) {
    const Field& F = C.F;
    const std::uint64_t p = F.p();
    const std::vector<UPoly> yc = bp::y_coeffs(C.q);
    const UPoly Y = up::from_coeffs({0, 1});
    for (int attempt = 0; attempt < 64 * cfg.retry_budget; ++attempt) {
        std::uint64_t x0 = rng.below(p);
        std::vector<std::uint64_t> fc(yc.size());
        for (std::size_t i = 0; i < yc.size(); ++i)
            fc[i] = up::eval(F, yc[i], x0);
        UPoly f = up::from_coeffs(std::move(fc));
        UPoly h = up::gcd(F, up::sub(F, up::powmod(F, Y, p, f), Y), f);
        int n = up::deg(h);
        if (n <= 0 || rng.below(static_cast<std::uint64_t>(C.deg)) >=
                          static_cast<std::uint64_t>(n))
            continue;
        if (p <= 4096) {
            std::uint64_t t = rng.below(static_cast<std::uint64_t>(n));
            for (std::uint64_t y0 = 0; y0 < p; ++y0)
                if (up::eval(F, h, y0) == 0 && t-- == 0) return {x0, y0};
            continue;  // unreachable: h has exactly n roots
        }
        for (int split = 0; split < 64 && up::deg(h) > 1; ++split) {
            UPoly base = up::from_coeffs({rng.below(p), 1});
            UPoly w = up::sub(F, up::powmod(F, base, (p - 1) / 2, h), up::one());
            UPoly g1 = up::gcd(F, w, h);
            int k = up::deg(g1);
            int m = up::deg(h);
            if (k <= 0 || k >= m) continue;
            h = rng.below(static_cast<std::uint64_t>(m)) <
                        static_cast<std::uint64_t>(k)
                    ? g1
                    : up::exact_div(F, h, g1);
        }
        if (up::deg(h) == 1) return {x0, F.neg(h.c[0])};
    }
    throw RetryExhaustedError("jac_random",
                              "no rational point found within the budget");
}

// Degree-1 divisor at a random rational point.  At a smooth point at most one
// lambda violates the transversality invariant, so a couple of draws suffice.
SmoothDivisor random_point_divisor(const Curve& C, Rng& rng,
                                   const RandomConfig& cfg) {
    for (int attempt = 0; attempt < 64 * cfg.retry_budget; ++attempt) {
        auto [x0, y0] = random_point(C, rng, cfg);
        std::uint64_t lambda = rng.below(C.F.p());
        if (auto D = point_divisor(C, x0, y0, lambda)) return *D;
    }
    throw RetryExhaustedError("jac_random",
                              "no primitive element for the sampled point");
}

// Degree-g effective representative of [D_plus - D_minus + g*O] - g*O,
// where deg D_plus - deg D_minus = g: picks a function f = b/h in
// L(D_plus - D_minus) and moves the divisor by (f).  nullopt when every
// basis numerator puts the representative at infinity (degree drop).
std::optional<SmoothDivisor> move_to_effective(const JacobianContext& J,
                                               const SmoothDivisor& d_plus,
                                               const SmoothDivisor& d_minus,
                                               Rng& rng,
                                               const RandomConfig& cfg) {
    const Curve& C = J.C;
    RRBasis rb = riemann_roch_basis(C, d_plus, d_minus, rng, cfg);
    if (rb.numerators.empty()) return std::nullopt;
    SmoothDivisor denom = add_divisors(C, d_minus, rb.div_h, rng, cfg);
    int dh = bp::total_deg(rb.h);
    for (const auto& b : rb.numerators) {
        // b and h must behave identically at infinity for the affine
        // bookkeeping to be exact: same total degree and no curve zeros at
        // infinity.  Otherwise the representative drops degree; try the next
        // basis element.
        if (bp::total_deg(b) != dh) continue;
        SmoothDivisor Db;
        try {
            Db = comp_princ_div(C, b, rng, cfg);
        } catch (const ZerosAtInfinityError&) {
            continue;
        } catch (const RetryExhaustedError&) {
            continue;  // no direction separates (b); the next numerator
                       // yields an equivalent representative
        }
        SmoothDivisor num = add_divisors(C, d_plus, Db, rng, cfg);
        SmoothDivisor D3 = subtract_divisors(C, num, denom, rng, cfg);
        if (divisor_degree(D3) == static_cast<int>(J.C.genus)) return D3;
    }
    return std::nullopt;
}

}  // namespace

JacobianContext make_jacobian(const Curve& C, const SmoothDivisor& base_point) {
    if (node_count(C) != 0)
        throw ValidationError("the group law supports smooth curves only");
    if (C.genus < 1)
        throw ValidationError("genus must be at least 1");
    if (divisor_degree(base_point) != 1)
        throw ValidationError("base point must be a degree-1 divisor");
    if (auto why = validate_divisor(C, base_point))
        throw ValidationError("base point invalid: " + *why);
    JacobianContext J{C, base_point, {}, {}};
    J.neutral_rep = n_fold_point(C, base_point, static_cast<int>(C.genus));
    J.double_rep = n_fold_point(C, base_point, static_cast<int>(2 * C.genus));
    return J;
}

JacobianElement jac_neutral(const JacobianContext& J) {
    return JacobianElement{J.neutral_rep};
}

JacobianElement jac_make(const JacobianContext& J, const SmoothDivisor& D) {
    if (divisor_degree(D) != static_cast<int>(J.C.genus))
        throw ValidationError("group elements are degree-g divisors");
    if (auto why = validate_divisor(J.C, D))
        throw ValidationError("divisor invalid: " + *why);
    return JacobianElement{D};
}

JacobianElement jac_add(const JacobianContext& J, const JacobianElement& P1,
                        const JacobianElement& P2, Rng& rng,
                        const RandomConfig& cfg) {
    SmoothDivisor dsum = add_divisors(J.C, P1.D, P2.D, rng, cfg);
    auto D3 = move_to_effective(J, dsum, J.neutral_rep, rng, cfg);
    if (!D3)
        throw AssumptionViolatedError(
            "jac_add: the canonical representative of the sum meets "
            "infinity");
    return JacobianElement{*D3};
}

JacobianElement jac_neg(const JacobianContext& J, const JacobianElement& P,
                        Rng& rng, const RandomConfig& cfg) {
    auto D3 = move_to_effective(J, J.double_rep, P.D, rng, cfg);
    if (!D3)
        throw AssumptionViolatedError(
            "jac_neg: the canonical representative of the negation meets "
            "infinity");
    return JacobianElement{*D3};
}

bool jac_equals(const JacobianContext& J, const JacobianElement& P1,
                const JacobianElement& P2, Rng& rng, const RandomConfig& cfg) {
    if (equal_divisors(J.C, P1.D, P2.D)) return true;
    // [D1] = [D2] iff D1 - D2 is principal iff L(D1 - D2) contains a nonzero
    // function; for a degree-0 divisor the dimension is 0 or 1.
    RRBasis rb = riemann_roch_basis(J.C, P1.D, P2.D, rng, cfg);
    return rb.dimension() == 1;
}

JacobianElement jac_reduce(const JacobianContext& J, const SmoothDivisor& D,
                           Rng& rng, const RandomConfig& cfg) {
    if (auto why = validate_divisor(J.C, D))
        throw ValidationError("divisor invalid: " + *why);
    int n = divisor_degree(D);
    int g = static_cast<int>(J.C.genus);
    if (n < g)
        throw ValidationError("jac_reduce needs a divisor of degree >= genus");
    if (n == g) return JacobianElement{D};
    SmoothDivisor excess = n_fold_point(J.C, J.base_point, n - g);
    auto D3 = move_to_effective(J, D, excess, rng, cfg);
    if (!D3)
        throw AssumptionViolatedError(
            "jac_reduce: the reduced representative meets infinity");
    return JacobianElement{*D3};
}

JacobianElement jac_random(const JacobianContext& J, Rng& rng,
                           const RandomConfig& cfg) {
    // Summing g independent random points gives representatives spread across
    // the group.  Divisors cut out by random forms would not: forms of equal
    // degree cut linearly equivalent divisors, so reducing them always lands
    // in one single class.
    int g = static_cast<int>(J.C.genus);
    for (int attempt = 0; attempt < cfg.retry_budget; ++attempt) {
        try {
            SmoothDivisor D = random_point_divisor(J.C, rng, cfg);
            for (int i = 1; i < g; ++i)
                D = add_divisors(J.C, D, random_point_divisor(J.C, rng, cfg),
                                 rng, cfg);
            return jac_make(J, D);
        } catch (const RetryExhaustedError&) {
            continue;
        }
    }
    throw RetryExhaustedError("jac_random",
                              "no random divisor assembled cleanly");
}

}  // namespace rr
