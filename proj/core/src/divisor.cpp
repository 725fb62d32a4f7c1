#include "rr/divisor.hpp"

#include <algorithm>

#include "rr/errors.hpp"
#include "rr/linalg.hpp"

namespace rr {

namespace {

UPoly s_poly(const Field&) { return up::monomial(1, 1); }  // S

// (S - s0)^k, monic.
UPoly linear_power(const Field& F, std::uint64_t s0, int k) {
    UPoly lin = up::from_coeffs({F.neg(s0), 1});
    UPoly r = up::one();
    for (int i = 0; i < k; ++i) r = up::mul(F, r, lin);
    return r;
}

// q_X(u,v) - lambda * q_Y(u,v) mod chi; the etale certificate is
// gcd(ret, chi) == 1.
UPoly etale_poly(const Curve& C, std::uint64_t lambda, const UPoly& u,
                 const UPoly& v, const UPoly& chi) {
    UPoly gx = bp::eval_pair_mod(C.F, C.qx, u, v, chi);
    UPoly gy = bp::eval_pair_mod(C.F, C.qy, u, v, chi);
    return up::rem(C.F, up::sub(C.F, gx, up::scale(C.F, gy, lambda)), chi);
}

// Tangent-cone coefficients at the nodes: the degree-2 Taylor part of q at
// (u_E, v_E) is a*X^2 + b*XY + c*Y^2 over F_p[S]/chi_E (p odd).
struct TangentCone {
    UPoly a, b, c;
};

TangentCone tangent_cone(const Field& F, const BiPoly& q, const UPoly& u,
                         const UPoly& v, const UPoly& chi) {
    BiPoly qx = bp::partial_x(F, q);
    BiPoly qy = bp::partial_y(F, q);
    BiPoly qxx = bp::partial_x(F, qx);
    BiPoly qxy = bp::partial_y(F, qx);
    BiPoly qyy = bp::partial_y(F, qy);
    std::uint64_t inv2 = F.inv(2);
    TangentCone t;
    t.a = up::scale(F, bp::eval_pair_mod(F, qxx, u, v, chi), inv2);
    t.b = bp::eval_pair_mod(F, qxy, u, v, chi);
    t.c = up::scale(F, bp::eval_pair_mod(F, qyy, u, v, chi), inv2);
    return t;
}

// Shared change-of-primitive-element core: rewrite (chi, u, v) on the element
// z = new_lambda*x + y.  nullopt when z does not generate F_p[S]/chi (the new
// direction does not separate the points).
struct CpeResult {
    UPoly chi, u, v;
};

std::optional<CpeResult> cpe_core(const Field& F, const UPoly& chi,
                                  const UPoly& u, const UPoly& v,
                                  std::uint64_t new_lambda) {
    int m = up::deg(chi);
    if (m <= 0) return CpeResult{up::one(), up::zero(), up::zero()};
    UPoly z = up::rem(F, up::add(F, up::scale(F, u, new_lambda), v), chi);
    std::size_t n = static_cast<std::size_t>(m);
    auto pad = [&](const UPoly& f, Mat& M, std::size_t col) {
        for (std::size_t i = 0; i < n; ++i)
            M.at(i, col) = i < f.c.size() ? f.c[i] : 0;
    };
    // Multiplication-by-z matrix in the power basis S^i: column i holds
    // z * S^i mod chi.
    Mat M = Mat::zero(n, n);
    UPoly w = z;
    for (std::size_t i = 0; i < n; ++i) {
        pad(w, M, i);
        w = up::rem(F, up::shift(w, 1), chi);
    }
    UPoly chi_new = la::char_poly(F, M);
    // Basis-change matrix: column i holds z^i mod chi; invertible iff z is a
    // primitive element for the algebra.
    Mat N = Mat::zero(n, n);
    UPoly zi = up::one();
    for (std::size_t i = 0; i < n; ++i) {
        pad(zi, N, i);
        zi = up::mulmod(F, zi, z, chi);
    }
    auto Ninv = la::inverse(F, N);
    if (!Ninv) return std::nullopt;
    auto vec_of = [&](const UPoly& f) {
        std::vector<std::uint64_t> x(n, 0);
        for (std::size_t i = 0; i < f.c.size(); ++i) x[i] = f.c[i];
        return x;
    };
    UPoly u_new = up::from_coeffs(la::apply(F, *Ninv, vec_of(u)));
    UPoly v_new = up::from_coeffs(la::apply(F, *Ninv, vec_of(v)));
    return CpeResult{chi_new, u_new, v_new};
}

void check_no_singularity_at_infinity(const Field& F, const BiPoly& q) {
    int d = bp::total_deg(q);
    // Dehomogenized data at the line at infinity, chart X = 1, parameter
    // t = Y/X: the curve meets infinity where w(t) = 0 and is singular there
    // iff all three homogenized partials vanish too.
    std::vector<std::uint64_t> w(d + 1, 0), u1(d + 1, 0), u2(d + 1, 0),
        u3(d + 1, 0);
    for (const auto& t : q.terms) {
        int tot = static_cast<int>(t.ex + t.ey);
        if (tot == d) {
            w[t.ey] = F.add(w[t.ey], t.c);
            u1[t.ey] = F.add(u1[t.ey], F.mul(t.c, t.ex % F.p()));
            if (t.ey > 0)
                u2[t.ey - 1] = F.add(u2[t.ey - 1], F.mul(t.c, t.ey % F.p()));
        } else if (tot == d - 1) {
            u3[t.ey] = F.add(u3[t.ey], t.c);
        }
    }
    UPoly g = up::gcd(F, up::gcd(F, up::from_coeffs(w), up::from_coeffs(u1)),
                      up::gcd(F, up::from_coeffs(u2), up::from_coeffs(u3)));
    if (up::deg(g) > 0)
        throw ValidationError("curve has a singular point at infinity");
}

}  // namespace

long long genus_of(int delta, int r) {
    return static_cast<long long>(delta - 1) * (delta - 2) / 2 - r;
}

UPoly compute_tangent_poly(const Field& F, const BiPoly& q,
                           const NodalDivisor& nodes) {
    int r = up::deg(nodes.chi);
    if (r <= 0) return up::one();
    TangentCone t = tangent_cone(F, q, nodes.u, nodes.v, nodes.chi);
    // P(lambda, S) = a(S) - b(S)*lambda + c(S)*lambda^2: the tangent cone
    // evaluated on the direction (1, -lambda).  Roots in lambda of
    // Res_S(P, chi_E) are the directions tangent to some branch at a node.
    std::vector<BiTerm> terms;
    auto push = [&](const UPoly& f, std::uint32_t lam_exp, bool negate) {
        for (std::size_t k = 0; k < f.c.size(); ++k)
            if (f.c[k])
                terms.push_back(BiTerm{lam_exp, static_cast<std::uint32_t>(k),
                                       negate ? F.neg(f.c[k]) : f.c[k]});
    };
    push(t.a, 0, false);
    push(t.b, 1, true);
    push(t.c, 2, false);
    BiPoly P = bp::normalize(F, std::move(terms));
    if (bp::is_zero(P))
        throw ValidationError("tangent cone vanishes identically at a node");
    std::vector<BiTerm> chi_terms;
    for (std::size_t k = 0; k < nodes.chi.c.size(); ++k)
        if (nodes.chi.c[k])
            chi_terms.push_back(
                BiTerm{0, static_cast<std::uint32_t>(k), nodes.chi.c[k]});
    BiPoly chi_b = bp::normalize(F, std::move(chi_terms));
    UPoly res =
        bp::resultant_y(F, P, chi_b, bp::SmallFieldPolicy::exact_fallback);
    if (up::is_zero(res))
        throw ValidationError("tangent polynomial vanishes identically");
    return up::monic(F, res);
}

Curve make_curve(const Field& F, const BiPoly& q, const NodalDivisor& nodes) {
    if (bp::is_zero(q)) throw ValidationError("curve polynomial is zero");
    int d = bp::total_deg(q);
    if (d < 2) throw ValidationError("curve degree must be at least 2");
    if (!bp::is_noether_position(q))
        throw ValidationError(
            "curve is not in projective Noether position: the coefficient of "
            "Y^deg(q) must be a nonzero constant");
    BiPoly qx = bp::partial_x(F, q);
    BiPoly qy = bp::partial_y(F, q);
    if (bp::is_zero(qx) && bp::is_zero(qy))
        throw ValidationError("curve polynomial is a p-th power");
    check_no_singularity_at_infinity(F, q);

    Curve C{F, q, qx, qy, d, nodes, 0};
    int r = up::deg(nodes.chi);
    if (r < 0 || !up::is_zero(up::sub(F, nodes.chi,
                                      up::monic(F, nodes.chi))))
        throw ValidationError("nodal chi must be monic");
    if (r == 0) {
        C.nodes = NodalDivisor{nodes.lambda, up::one(), up::zero(), up::zero(),
                               up::one()};
    } else {
        const UPoly& chi = nodes.chi;
        if (up::deg(nodes.u) >= r || up::deg(nodes.v) >= r)
            throw ValidationError("nodal u, v must be reduced mod chi");
        if (!up::is_one(up::gcd(F, chi, up::derivative(F, chi))))
            throw ValidationError("nodal chi must be squarefree");
        UPoly h2 = up::rem(
            F,
            up::sub(F, up::add(F, up::scale(F, nodes.u, nodes.lambda), nodes.v),
                    s_poly(F)),
            chi);
        if (!up::is_zero(h2))
            throw ValidationError("nodal parametrization: lambda*u + v != S");
        if (!up::is_zero(bp::eval_pair_mod(F, q, nodes.u, nodes.v, chi)) ||
            !up::is_zero(bp::eval_pair_mod(F, qx, nodes.u, nodes.v, chi)) ||
            !up::is_zero(bp::eval_pair_mod(F, qy, nodes.u, nodes.v, chi)))
            throw ValidationError(
                "nodal block points are not singular points of the curve");
        TangentCone t = tangent_cone(F, q, nodes.u, nodes.v, chi);
        UPoly disc = up::rem(
            F,
            up::sub(F, up::mul(F, t.b, t.b),
                    up::scale(F, up::mul(F, t.a, t.c), F.from_int(4))),
            chi);
        if (!up::is_one(up::gcd(F, disc, chi)))
            throw ValidationError(
                "a singular point is not an ordinary node (degenerate tangent "
                "cone)");
        UPoly te = compute_tangent_poly(F, q, nodes);
        if (!(te == up::monic(F, nodes.tangent_poly)))
            throw ValidationError(
                "nodal tangent polynomial does not match the curve");
        C.nodes.tangent_poly = te;
    }
    C.genus = genus_of(d, std::max(r, 0));
    if (C.genus < 0)
        throw ValidationError("genus would be negative; too many nodes");
    return C;
}

std::optional<std::string> validate_divisor(const Curve& C,
                                            const SmoothDivisor& D) {
    const Field& F = C.F;
    int m = up::deg(D.chi);
    if (m < 0 || !(up::monic(F, D.chi) == D.chi)) return "chi must be monic";
    if (m == 0) {
        if (!up::is_zero(D.u) || !up::is_zero(D.v))
            return "zero divisor must have u = v = 0";
        return std::nullopt;
    }
    if (up::deg(D.u) >= m || up::deg(D.v) >= m)
        return "u and v must be reduced mod chi";
    UPoly h2 = up::rem(
        F,
        up::sub(F, up::add(F, up::scale(F, D.u, D.lambda), D.v), s_poly(F)),
        D.chi);
    if (!up::is_zero(h2)) return "lambda*u + v != S mod chi";
    if (!up::is_zero(bp::eval_pair_mod(F, C.q, D.u, D.v, D.chi)))
        return "points do not lie on the curve (q(u,v) != 0 mod chi)";
    UPoly t = etale_poly(C, D.lambda, D.u, D.v, D.chi);
    if (!up::is_one(up::gcd(F, t, D.chi)))
        return "projection along lambda is not etale on the support "
               "(gcd(q_X(u,v) - lambda*q_Y(u,v), chi) != 1)";
    return std::nullopt;
}

std::optional<UPoly> xcrt(const Field& F, const UPoly& chi1, const UPoly& u1,
                          const UPoly& chi2, const UPoly& u2) {
    up::Xgcd x = up::xgcd(F, chi1, chi2);
    UPoly diff = up::sub(F, u1, u2);
    if (!up::is_zero(up::rem(F, diff, x.g))) return std::nullopt;
    UPoly q1 = up::exact_div(F, chi1, x.g);
    UPoly q2 = up::exact_div(F, chi2, x.g);
    UPoly lcm = up::mul(F, chi1, q2);
    UPoly w = up::add(F, up::mul(F, u2, up::mul(F, x.a, q1)),
                      up::mul(F, u1, up::mul(F, x.b, q2)));
    return up::rem(F, w, lcm);
}

std::optional<SmoothDivisor> change_prim_elt(const Curve& C,
                                             const SmoothDivisor& D,
                                             std::uint64_t new_lambda) {
    if (is_zero_divisor(D)) return zero_divisor(new_lambda);
    // The new direction must stay etale on the support.
    UPoly t = etale_poly(C, new_lambda, D.u, D.v, D.chi);
    if (!up::is_one(up::gcd(C.F, t, D.chi))) return std::nullopt;
    auto r = cpe_core(C.F, D.chi, D.u, D.v, new_lambda);
    if (!r) return std::nullopt;
    return SmoothDivisor{new_lambda, r->chi, r->u, r->v};
}

std::optional<NodalDivisor> change_prim_elt_nodal(const Field& F,
                                                  const NodalDivisor& N,
                                                  std::uint64_t new_lambda) {
    if (up::deg(N.chi) == 0)
        return NodalDivisor{new_lambda, up::one(), up::zero(), up::zero(),
                            N.tangent_poly};
    auto r = cpe_core(F, N.chi, N.u, N.v, new_lambda);
    if (!r) return std::nullopt;
    return NodalDivisor{new_lambda, r->chi, r->u, r->v, N.tangent_poly};
}

std::optional<std::pair<UPoly, UPoly>> hensel_step(const Curve& C,
                                                   std::uint64_t lambda,
                                                   const UPoly& u,
                                                   const UPoly& v,
                                                   const UPoly& chi_hat) {
    const Field& F = C.F;
    if (up::deg(chi_hat) <= 0) return std::make_pair(up::zero(), up::zero());
    UPoly u0 = up::rem(F, u, chi_hat);
    UPoly v0 = up::rem(F, v, chi_hat);
    UPoly e = bp::eval_pair_mod(F, C.q, u0, v0, chi_hat);
    UPoly gx = bp::eval_pair_mod(F, C.qx, u0, v0, chi_hat);
    UPoly gy = bp::eval_pair_mod(F, C.qy, u0, v0, chi_hat);
    UPoly w = up::rem(
        F, up::sub(F, up::add(F, up::scale(F, u0, lambda), v0), s_poly(F)),
        chi_hat);
    UPoly den = up::rem(F, up::sub(F, gx, up::scale(F, gy, lambda)), chi_hat);
    auto dinv = up::invmod(F, den, chi_hat);
    if (!dinv) return std::nullopt;
    // Newton step for the system (q(u,v), lambda*u + v - S) = 0: the Jacobian
    // in (u, v) is [[gx, gy], [lambda, 1]] with determinant gx - lambda*gy.
    UPoly du = up::mulmod(F, up::sub(F, e, up::mulmod(F, w, gy, chi_hat)),
                          *dinv, chi_hat);
    UPoly dv = up::mulmod(
        F,
        up::add(F, up::scale(F, e, F.neg(lambda)), up::mulmod(F, w, gx, chi_hat)),
        *dinv, chi_hat);
    UPoly u_hat = up::rem(F, up::sub(F, u0, du), chi_hat);
    UPoly v_hat = up::rem(F, up::sub(F, v0, dv), chi_hat);
    return std::make_pair(u_hat, v_hat);
}

namespace {

// Rewrites D1, D2 on one common primitive element.  Attempt 0 reuses the
// stored lambda when the two divisors already share it.
struct CommonPair {
    std::uint64_t lambda;
    SmoothDivisor a, b;
};

std::optional<CommonPair> to_common_lambda(const Curve& C,
                                           const SmoothDivisor& D1,
                                           const SmoothDivisor& D2,
                                           int attempt, Rng& rng,
                                           const RandomConfig& cfg) {
    if (attempt == 0 && D1.lambda == D2.lambda)
        return CommonPair{D1.lambda, D1, D2};
    std::uint64_t lam = draw_sample(rng, cfg, C.F.p());
    auto a = change_prim_elt(C, D1, lam);
    if (!a) return std::nullopt;
    auto b = change_prim_elt(C, D2, lam);
    if (!b) return std::nullopt;
    return CommonPair{lam, *a, *b};
}

}  // namespace

SmoothDivisor add_divisors(const Curve& C, const SmoothDivisor& D1,
                           const SmoothDivisor& D2, Rng& rng,
                           const RandomConfig& cfg) {
    if (is_zero_divisor(D1)) return D2;
    if (is_zero_divisor(D2)) return D1;
    const Field& F = C.F;
    for (int attempt = 0; attempt < cfg.retry_budget; ++attempt) {
        auto cp = to_common_lambda(C, D1, D2, attempt, rng, cfg);
        if (!cp) continue;
        // CRT merge is defined exactly when the two parametrizations agree on
        // gcd(chi1, chi2); a mismatch means two distinct points collided on
        // the same primitive-element value, so we redraw the direction.
        auto u12 = xcrt(F, cp->a.chi, cp->a.u, cp->b.chi, cp->b.u);
        auto v12 = xcrt(F, cp->a.chi, cp->a.v, cp->b.chi, cp->b.v);
        if (!u12 || !v12) continue;
        // (u12, v12) is valid modulo lcm(chi1, chi2) and the product modulus
        // divides lcm^2, so a single lift step reaches it.
        UPoly chi_hat = up::mul(F, cp->a.chi, cp->b.chi);
        auto lifted = hensel_step(C, cp->lambda, *u12, *v12, chi_hat);
        if (!lifted) continue;
        SmoothDivisor out{cp->lambda, chi_hat, lifted->first, lifted->second};
        UPoly t = etale_poly(C, out.lambda, out.u, out.v, out.chi);
        if (!up::is_one(up::gcd(F, t, out.chi))) continue;
        return out;
    }
    throw RetryExhaustedError("add_divisors",
                              "no primitive element worked for the sum");
}

SmoothDivisor subtract_divisors(const Curve& C, const SmoothDivisor& D1,
                                const SmoothDivisor& D2, Rng& rng,
                                const RandomConfig& cfg) {
    if (is_zero_divisor(D1) || is_zero_divisor(D2)) return D1;
    const Field& F = C.F;
    for (int attempt = 0; attempt < cfg.retry_budget; ++attempt) {
        auto cp = to_common_lambda(C, D1, D2, attempt, rng, cfg);
        if (!cp) continue;
        UPoly g = up::gcd(F, cp->a.chi, cp->b.chi);
        if (up::deg(g) > 0) {
            // The shared factor must describe shared points: on a smooth
            // branch the local expansions agree automatically, so any
            // disagreement is a cross-collision and the direction is redrawn.
            if (!up::is_zero(up::rem(F, up::sub(F, cp->a.u, cp->b.u), g)) ||
                !up::is_zero(up::rem(F, up::sub(F, cp->a.v, cp->b.v), g)))
                continue;
        }
        UPoly chi_hat = up::exact_div(F, cp->a.chi, g);
        if (up::deg(chi_hat) == 0) return zero_divisor(cp->lambda);
        return SmoothDivisor{cp->lambda, chi_hat,
                             up::rem(F, cp->a.u, chi_hat),
                             up::rem(F, cp->a.v, chi_hat)};
    }
    throw RetryExhaustedError("subtract_divisors",
                              "no primitive element worked for the difference");
}

bool equal_divisors(const Curve& C, const SmoothDivisor& D1,
                    const SmoothDivisor& D2) {
    const Field& F = C.F;
    int m = up::deg(D1.chi);
    if (m != up::deg(D2.chi)) return false;
    if (m == 0) return true;
    if (D1.lambda == D2.lambda)
        return D1.chi == D2.chi && D1.u == D2.u && D1.v == D2.v;
    // Evaluate D1's primitive element on D2's points: z2(s) = lambda1*x + y.
    UPoly z2 = up::rem(
        F, up::add(F, up::scale(F, D2.u, D1.lambda), D2.v), D2.chi);
    std::size_t n = static_cast<std::size_t>(m);
    Mat M = Mat::zero(n, n);
    UPoly w = z2;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k)
            M.at(k, i) = k < w.c.size() ? w.c[k] : 0;
        w = up::rem(F, up::shift(w, 1), D2.chi);
    }
    if (!(la::char_poly(F, M) == D1.chi)) return false;
    // Same multiset of primitive-element values; now the parametrizations
    // must agree pointwise: u1(z2) = u2 and v1(z2) = v2 on D2.
    if (!(up::compose_mod(F, D1.u, z2, D2.chi) == D2.u)) return false;
    if (!(up::compose_mod(F, D1.v, z2, D2.chi) == D2.v)) return false;
    return true;
}

std::optional<SmoothDivisor> point_divisor(const Curve& C, std::uint64_t x0,
                                           std::uint64_t y0,
                                           std::uint64_t lambda) {
    const Field& F = C.F;
    x0 %= F.p();
    y0 %= F.p();
    if (bp::eval(F, C.q, x0, y0) != 0)
        throw ValidationError("point does not lie on the curve");
    std::uint64_t gx = bp::eval(F, C.qx, x0, y0);
    std::uint64_t gy = bp::eval(F, C.qy, x0, y0);
    if (gx == 0 && gy == 0)
        throw ValidationError("point is a singular point of the curve");
    if (F.sub(gx, F.mul(lambda, gy)) == 0) return std::nullopt;
    std::uint64_t s0 = F.add(F.mul(lambda, x0), y0);
    return SmoothDivisor{lambda, up::from_coeffs({F.neg(s0), 1}),
                         up::constant(x0), up::constant(y0)};
}

SmoothDivisor n_fold_point(const Curve& C, const SmoothDivisor& P, int t) {
    const Field& F = C.F;
    if (up::deg(P.chi) != 1)
        throw ValidationError("n_fold_point needs a degree-1 divisor");
    if (auto why = validate_divisor(C, P))
        throw ValidationError("n_fold_point: " + *why);
    if (t < 0) throw ValidationError("multiplicity must be >= 0");
    if (t == 0) return zero_divisor(P.lambda);
    std::uint64_t s0 = F.neg(P.chi.c[0]);
    SmoothDivisor cur = P;
    int k = 1;
    while (k < t) {
        int k2 = std::min(2 * k, t);
        UPoly chi2 = linear_power(F, s0, k2);
        auto lifted = hensel_step(C, P.lambda, cur.u, cur.v, chi2);
        if (!lifted)
            throw Error("n_fold_point: lift failed on a valid point");
        cur = SmoothDivisor{P.lambda, chi2, lifted->first, lifted->second};
        k = k2;
    }
    return cur;
}

}  // namespace rr
