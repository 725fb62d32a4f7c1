#include "rr/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace rr {
namespace up {

namespace {

constexpr std::size_t kKaratsubaThreshold = 32;

void trim(std::vector<std::uint64_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::vector<std::uint64_t> mul_school(const Field& F,
                                      const std::vector<std::uint64_t>& a,
                                      const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    return r;
}

std::vector<std::uint64_t> mul_rec(const Field& F,
                                   const std::vector<std::uint64_t>& a,
                                   const std::vector<std::uint64_t>& b) {
    if (a.empty() || b.empty()) return {};
    if (std::min(a.size(), b.size()) < kKaratsubaThreshold)
        return mul_school(F, a, b);
    std::size_t h = std::max(a.size(), b.size()) / 2;
    auto lo = [&](const std::vector<std::uint64_t>& v) {
        return std::vector<std::uint64_t>(v.begin(),
                                          v.begin() + std::min(h, v.size()));
    };
    auto hi = [&](const std::vector<std::uint64_t>& v) {
        return v.size() > h ? std::vector<std::uint64_t>(v.begin() + h, v.end())
                            : std::vector<std::uint64_t>{};
    };
    auto vadd = [&](std::vector<std::uint64_t> x,
                    const std::vector<std::uint64_t>& y) {
        if (x.size() < y.size()) x.resize(y.size(), 0);
        for (std::size_t i = 0; i < y.size(); ++i) x[i] = F.add(x[i], y[i]);
        return x;
    };
    // (a0 + a1 t)(b0 + b1 t) with t = S^h, three recursive products.
    auto a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
    auto p0 = mul_rec(F, a0, b0);
    auto p2 = mul_rec(F, a1, b1);
    auto pm = mul_rec(F, vadd(a0, a1), vadd(b0, b1));
    std::vector<std::uint64_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < p0.size(); ++i) r[i] = F.add(r[i], p0[i]);
    for (std::size_t i = 0; i < p2.size(); ++i)
        r[i + 2 * h] = F.add(r[i + 2 * h], p2[i]);
    for (std::size_t i = 0; i < pm.size(); ++i) {
        std::uint64_t mid = pm[i];
        if (i < p0.size()) mid = F.sub(mid, p0[i]);
        if (i < p2.size()) mid = F.sub(mid, p2[i]);
        r[i + h] = F.add(r[i + h], mid);
    }
    return r;
}

}  // namespace

UPoly from_coeffs(std::vector<std::uint64_t> c) {
    trim(c);
    return UPoly{std::move(c)};
}

UPoly constant(std::uint64_t a) {
    return a == 0 ? UPoly{} : UPoly{{a}};
}

UPoly monomial(std::uint64_t a, std::size_t k) {
    if (a == 0) return UPoly{};
    std::vector<std::uint64_t> c(k + 1, 0);
    c[k] = a;
    return UPoly{std::move(c)};
}

UPoly add(const Field& F, const UPoly& a, const UPoly& b) {
    std::vector<std::uint64_t> c(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::uint64_t x = i < a.c.size() ? a.c[i] : 0;
        std::uint64_t y = i < b.c.size() ? b.c[i] : 0;
        c[i] = F.add(x, y);
    }
    trim(c);
    return UPoly{std::move(c)};
}

UPoly sub(const Field& F, const UPoly& a, const UPoly& b) {
    std::vector<std::uint64_t> c(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::uint64_t x = i < a.c.size() ? a.c[i] : 0;
        std::uint64_t y = i < b.c.size() ? b.c[i] : 0;
        c[i] = F.sub(x, y);
    }
    trim(c);
    return UPoly{std::move(c)};
}

UPoly neg(const Field& F, const UPoly& a) {
    UPoly r = a;
    for (auto& x : r.c) x = F.neg(x);
    return r;
}

UPoly scale(const Field& F, const UPoly& a, std::uint64_t k) {
    if (k == 0) return UPoly{};
    UPoly r = a;
    for (auto& x : r.c) x = F.mul(x, k);
    return r;
}

UPoly mul(const Field& F, const UPoly& a, const UPoly& b) {
    auto c = mul_rec(F, a.c, b.c);
    trim(c);
    return UPoly{std::move(c)};
}

UPoly shift(const UPoly& a, std::size_t k) {
    if (a.c.empty() || k == 0) return a;
    std::vector<std::uint64_t> c(a.c.size() + k, 0);
    std::copy(a.c.begin(), a.c.end(), c.begin() + k);
    return UPoly{std::move(c)};
}

std::pair<UPoly, UPoly> divrem(const Field& F, const UPoly& a, const UPoly& b) {
    if (is_zero(b)) throw Error("polynomial division by zero");
    if (a.c.size() < b.c.size()) return {UPoly{}, a};
    std::vector<std::uint64_t> r = a.c;
    std::vector<std::uint64_t> q(a.c.size() - b.c.size() + 1, 0);
    std::uint64_t inv_lc = F.inv(b.c.back());
    for (std::size_t k = q.size(); k-- > 0;) {
        std::uint64_t t = F.mul(r[k + b.c.size() - 1], inv_lc);
        q[k] = t;
        if (t == 0) continue;
        for (std::size_t i = 0; i < b.c.size(); ++i)
            r[k + i] = F.sub(r[k + i], F.mul(t, b.c[i]));
    }
    trim(q);
    trim(r);
    return {UPoly{std::move(q)}, UPoly{std::move(r)}};
}

UPoly rem(const Field& F, const UPoly& a, const UPoly& b) {
    return divrem(F, a, b).second;
}

UPoly quot(const Field& F, const UPoly& a, const UPoly& b) {
    return divrem(F, a, b).first;
}

UPoly exact_div(const Field& F, const UPoly& a, const UPoly& b) {
    auto [q, r] = divrem(F, a, b);
    if (!is_zero(r)) throw Error("polynomial division expected to be exact");
    return q;
}

UPoly monic(const Field& F, const UPoly& a) {
    if (is_zero(a) || a.c.back() == 1) return a;
    return scale(F, a, F.inv(a.c.back()));
}

UPoly gcd(const Field& F, const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!is_zero(y)) {
        UPoly r = rem(F, x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return monic(F, x);
}

Xgcd xgcd(const Field& F, const UPoly& f, const UPoly& h) {
    UPoly r0 = f, r1 = h;
    UPoly a0 = one(), a1 = zero();
    UPoly b0 = zero(), b1 = one();
    while (!is_zero(r1)) {
        auto [q, r] = divrem(F, r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UPoly a2 = sub(F, a0, mul(F, q, a1));
        a0 = std::move(a1);
        a1 = std::move(a2);
        UPoly b2 = sub(F, b0, mul(F, q, b1));
        b0 = std::move(b1);
        b1 = std::move(b2);
    }
    if (!is_zero(r0) && r0.c.back() != 1) {
        std::uint64_t s = F.inv(r0.c.back());
        r0 = scale(F, r0, s);
        a0 = scale(F, a0, s);
        b0 = scale(F, b0, s);
    }
    return Xgcd{std::move(r0), std::move(a0), std::move(b0)};
}

std::optional<UPoly> invmod(const Field& F, const UPoly& a, const UPoly& chi) {
    if (up::deg(chi) < 1) return std::nullopt;  // trivial quotient ring
    auto e = xgcd(F, rem(F, a, chi), chi);
    if (!is_one(e.g)) return std::nullopt;
    return rem(F, e.a, chi);
}

UPoly mulmod(const Field& F, const UPoly& a, const UPoly& b, const UPoly& chi) {
    return rem(F, mul(F, a, b), chi);
}

UPoly powmod(const Field& F, const UPoly& base, std::uint64_t e, const UPoly& chi) {
    UPoly acc = one();
    UPoly sq = rem(F, base, chi);
    while (e > 0) {
        if (e & 1) acc = mulmod(F, acc, sq, chi);
        sq = mulmod(F, sq, sq, chi);
        e >>= 1;
    }
    return acc;
}

std::uint64_t eval(const Field& F, const UPoly& f, std::uint64_t x) {
    std::uint64_t r = 0;
    for (std::size_t i = f.c.size(); i-- > 0;) r = F.add(F.mul(r, x), f.c[i]);
    return r;
}

UPoly derivative(const Field& F, const UPoly& f) {
    if (f.c.size() <= 1) return UPoly{};
    std::vector<std::uint64_t> c(f.c.size() - 1);
    for (std::size_t i = 1; i < f.c.size(); ++i)
        c[i - 1] = F.mul(f.c[i], i % F.p());
    trim(c);
    return UPoly{std::move(c)};
}

UPoly squarefree_part(const Field& F, const UPoly& f) {
    if (deg(f) <= 0) return is_zero(f) ? f : one();
    UPoly d = derivative(F, f);
    if (is_zero(d)) {
        // f = g(S^p) = g(S)^p over F_p; recurse on g.
        std::vector<std::uint64_t> g((f.c.size() - 1) / F.p() + 1, 0);
        for (std::size_t i = 0; i < g.size(); ++i) g[i] = f.c[i * F.p()];
        return squarefree_part(F, from_coeffs(std::move(g)));
    }
    // w collects each factor whose multiplicity is not divisible by p;
    // factors with p | multiplicity sit entirely inside the gcd, so strip
    // w from it and recurse on the remaining p-th power.
    UPoly g = gcd(F, f, d);
    UPoly w = exact_div(F, f, g);
    while (true) {
        UPoly c = gcd(F, g, w);
        if (deg(c) <= 0) break;
        g = exact_div(F, g, c);
    }
    if (deg(g) > 0) w = mul(F, w, squarefree_part(F, g));
    return monic(F, w);
}

UPoly compose_mod(const Field& F, const UPoly& f, const UPoly& g,
                  const UPoly& chi) {
    UPoly r;
    for (std::size_t i = f.c.size(); i-- > 0;)
        r = rem(F, add(F, mul(F, r, g), constant(f.c[i])), chi);
    return r;
}

UPoly interpolate_points(const Field& F, const std::vector<std::uint64_t>& xs,
                         const std::vector<std::uint64_t>& ys) {
    if (xs.size() != ys.size()) throw Error("interpolation arity mismatch");
    // Newton divided differences.
    std::size_t n = xs.size();
    std::vector<std::uint64_t> coef = ys;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = n; i-- > j;) {
            std::uint64_t dx = F.sub(xs[i], xs[i - j]);
            if (dx == 0) throw Error("interpolation points not distinct");
            coef[i] = F.mul(F.sub(coef[i], coef[i - 1]), F.inv(dx));
        }
    }
    UPoly r;
    for (std::size_t i = n; i-- > 0;) {
        // r = r * (S - xs[i]) + coef[i]
        UPoly lin = from_coeffs({F.neg(xs[i]), 1});
        r = add(F, mul(F, r, lin), constant(coef[i]));
    }
    return r;
}

std::string to_string(const UPoly& f) {
    if (is_zero(f)) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (i) os << ' ';
        os << f.c[i];
    }
    return os.str();
}

UPoly parse(const Field& F, const std::string& text) {
    std::istringstream is(text);
    std::vector<std::uint64_t> c;
    long long x;
    while (is >> x) c.push_back(F.from_int(x));
    if (!is.eof()) throw ParseError("bad polynomial coefficient list: " + text);
    return from_coeffs(std::move(c));
}

}  // namespace up
}  // namespace rr
