#include "rr/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "rr/linalg.hpp"

namespace rr {
namespace bp {

BiPoly normalize(const Field& F, std::vector<BiTerm> terms) {
    std::sort(terms.begin(), terms.end(), [](const BiTerm& a, const BiTerm& b) {
        return a.ex != b.ex ? a.ex < b.ex : a.ey < b.ey;
    });
    std::vector<BiTerm> out;
    for (const auto& t : terms) {
        if (!out.empty() && out.back().ex == t.ex && out.back().ey == t.ey) {
            out.back().c = F.add(out.back().c, t.c);
        } else {
            out.push_back(t);
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const BiTerm& t) { return t.c == 0; }),
              out.end());
    return BiPoly{std::move(out)};
}

BiPoly constant(std::uint64_t a) {
    return a == 0 ? BiPoly{} : BiPoly{{BiTerm{0, 0, a}}};
}

BiPoly monomial(std::uint64_t a, std::uint32_t ex, std::uint32_t ey) {
    return a == 0 ? BiPoly{} : BiPoly{{BiTerm{ex, ey, a}}};
}

int total_deg(const BiPoly& f) {
    int d = -1;
    for (const auto& t : f.terms)
        d = std::max(d, static_cast<int>(t.ex + t.ey));
    return d;
}

int x_deg(const BiPoly& f) {
    int d = -1;
    for (const auto& t : f.terms) d = std::max(d, static_cast<int>(t.ex));
    return d;
}

int y_deg(const BiPoly& f) {
    int d = -1;
    for (const auto& t : f.terms) d = std::max(d, static_cast<int>(t.ey));
    return d;
}

std::uint64_t coeff(const BiPoly& f, std::uint32_t ex, std::uint32_t ey) {
    for (const auto& t : f.terms)
        if (t.ex == ex && t.ey == ey) return t.c;
    return 0;
}

BiPoly add(const Field& F, const BiPoly& a, const BiPoly& b) {
    std::vector<BiTerm> terms = a.terms;
    terms.insert(terms.end(), b.terms.begin(), b.terms.end());
    return normalize(F, std::move(terms));
}

BiPoly scale(const Field& F, const BiPoly& a, std::uint64_t k) {
    if (k == 0) return BiPoly{};
    BiPoly r = a;
    for (auto& t : r.terms) t.c = F.mul(t.c, k);
    return r;
}

std::uint64_t eval(const Field& F, const BiPoly& f, std::uint64_t x,
                   std::uint64_t y) {
    std::uint64_t r = 0;
    for (const auto& t : f.terms)
        r = F.add(r, F.mul(t.c, F.mul(F.pow(x, t.ex), F.pow(y, t.ey))));
    return r;
}

BiPoly partial_x(const Field& F, const BiPoly& f) {
    std::vector<BiTerm> terms;
    for (const auto& t : f.terms) {
        if (t.ex == 0) continue;
        std::uint64_t c = F.mul(t.c, t.ex % F.p());
        if (c) terms.push_back(BiTerm{t.ex - 1, t.ey, c});
    }
    return normalize(F, std::move(terms));
}

BiPoly partial_y(const Field& F, const BiPoly& f) {
    std::vector<BiTerm> terms;
    for (const auto& t : f.terms) {
        if (t.ey == 0) continue;
        std::uint64_t c = F.mul(t.c, t.ey % F.p());
        if (c) terms.push_back(BiTerm{t.ex, t.ey - 1, c});
    }
    return normalize(F, std::move(terms));
}

bool is_noether_position(const BiPoly& f) {
    int d = total_deg(f);
    if (d < 0) return false;
    return y_deg(f) == d && coeff(f, 0, static_cast<std::uint32_t>(d)) != 0;
}

std::vector<UPoly> y_coeffs(const BiPoly& f) {
    int dy = y_deg(f);
    std::vector<std::vector<std::uint64_t>> rows(dy + 1);
    for (const auto& t : f.terms) {
        auto& row = rows[t.ey];
        if (row.size() <= t.ex) row.resize(t.ex + 1, 0);
        row[t.ex] = t.c;
    }
    std::vector<UPoly> out;
    out.reserve(rows.size());
    for (auto& r : rows) out.push_back(up::from_coeffs(std::move(r)));
    return out;
}

BiPoly from_y_coeffs(const Field& F, const std::vector<UPoly>& yc) {
    std::vector<BiTerm> terms;
    for (std::size_t j = 0; j < yc.size(); ++j)
        for (std::size_t i = 0; i < yc[j].c.size(); ++i)
            if (yc[j].c[i])
                terms.push_back(BiTerm{static_cast<std::uint32_t>(i),
                                       static_cast<std::uint32_t>(j),
                                       yc[j].c[i]});
    return normalize(F, std::move(terms));
}

BiPoly shear(const Field& F, const BiPoly& f, std::uint64_t lambda) {
    if (lambda % F.p() == 0) throw Error("shear requires lambda != 0");
    int d = total_deg(f);
    if (d < 0) return BiPoly{};
    // Pascal triangle mod p for the binomial expansion of (S - Y)^i.
    std::vector<std::vector<std::uint64_t>> binom(d + 1);
    for (int i = 0; i <= d; ++i) {
        binom[i].assign(i + 1, 1);
        for (int k = 1; k < i; ++k)
            binom[i][k] = F.add(binom[i - 1][k - 1], binom[i - 1][k]);
    }
    std::vector<std::vector<std::uint64_t>> grid(
        d + 1, std::vector<std::uint64_t>(d + 1, 0));  // grid[s][y]
    for (const auto& t : f.terms) {
        // lambda^{d-i} * c * (S - Y)^i * Y^j
        std::uint64_t base = F.mul(t.c, F.pow(lambda, d - t.ex));
        for (std::uint32_t k = 0; k <= t.ex; ++k) {
            std::uint64_t c = F.mul(base, binom[t.ex][k]);
            if ((t.ex - k) & 1) c = F.neg(c);  // (-Y)^{i-k}
            auto& cell = grid[k][t.ey + (t.ex - k)];
            cell = F.add(cell, c);
        }
    }
    std::vector<BiTerm> terms;
    for (int s = 0; s <= d; ++s)
        for (int y = 0; y <= d; ++y)
            if (grid[s][y])
                terms.push_back(BiTerm{static_cast<std::uint32_t>(s),
                                       static_cast<std::uint32_t>(y),
                                       grid[s][y]});
    return normalize(F, std::move(terms));
}

UPoly eval_pair_mod(const Field& F, const BiPoly& f, const UPoly& u,
                    const UPoly& v, const UPoly& chi) {
    if (up::deg(chi) < 1) return up::zero();  // trivial quotient ring
    UPoly res;
    UPoly pu = up::rem(F, up::one(), chi);
    std::uint32_t cur_i = 0;
    UPoly pw = pu;
    std::uint32_t cur_j = 0;
    bool fresh_i = true;
    for (const auto& t : f.terms) {  // storage order is increasing lex (i, j)
        while (cur_i < t.ex) {
            pu = up::mulmod(F, pu, u, chi);
            ++cur_i;
            fresh_i = true;
        }
        if (fresh_i) {
            pw = pu;
            cur_j = 0;
            fresh_i = false;
        }
        while (cur_j < t.ey) {
            pw = up::mulmod(F, pw, v, chi);
            ++cur_j;
        }
        res = up::add(F, res, up::scale(F, pw, t.c));
    }
    return up::rem(F, res, chi);
}

std::vector<std::pair<int, int>> monomials_upto(int d, int y_cap) {
    std::vector<std::pair<int, int>> mons;
    for (int t = 0; t <= d; ++t)
        for (int i = t; i >= 0; --i) {
            int j = t - i;
            if (j < y_cap) mons.emplace_back(i, j);
        }
    return mons;
}

std::vector<UPoly> monomial_values_mod(
    const Field& F, const std::vector<std::pair<int, int>>& mons,
    const UPoly& u, const UPoly& v, const UPoly& chi) {
    std::vector<UPoly> out(mons.size());
    if (up::deg(chi) < 1) return out;  // all zero in the trivial ring
    int max_i = 0, max_j = 0;
    for (auto [i, j] : mons) {
        max_i = std::max(max_i, i);
        max_j = std::max(max_j, j);
    }
    // index of each requested monomial, or -1
    std::vector<std::vector<int>> where(
        max_i + 1, std::vector<int>(max_j + 1, -1));
    for (std::size_t k = 0; k < mons.size(); ++k)
        where[mons[k].first][mons[k].second] = static_cast<int>(k);
    UPoly pu = up::rem(F, up::one(), chi);
    for (int i = 0; i <= max_i; ++i) {
        if (i) pu = up::mulmod(F, pu, u, chi);
        UPoly pw = pu;
        for (int j = 0; j <= max_j; ++j) {
            if (j) pw = up::mulmod(F, pw, v, chi);
            int k = where[i][j];
            if (k >= 0) out[k] = pw;
        }
    }
    return out;
}

namespace {

// ----- elimination kernels ------------------------------------------------

struct YForm {
    std::vector<UPoly> yc;  // coefficients of Y^0..Y^n over F_p[S]
    int n() const { return static_cast<int>(yc.size()) - 1; }
};

YForm to_yform(const BiPoly& f) {
    return YForm{y_coeffs(f)};
}

// Sylvester matrix of specialized coefficient vectors a (deg m) and b (deg n),
// conventional layout: n rows of A-shifts then m rows of B-shifts, columns in
// descending Y-degree.
Mat sylvester_at(const Field&, const std::vector<std::uint64_t>& a,
                 const std::vector<std::uint64_t>& b) {
    int m = static_cast<int>(a.size()) - 1;
    int n = static_cast<int>(b.size()) - 1;
    Mat M = Mat::zero(m + n, m + n);
    for (int t = 0; t < n; ++t)
        for (int k = 0; k <= m; ++k) M.at(t, t + k) = a[m - k];
    for (int t = 0; t < m; ++t)
        for (int k = 0; k <= n; ++k) M.at(n + t, t + k) = b[n - k];
    return M;
}

// Rows of the first-subresultant minor: n-1 shifts of A and m-1 shifts of B
// over columns of Y-degree m+n-2 .. 0 (m+n-1 columns, m+n-2 rows).
Mat subres1_rows_at(const Field&, const std::vector<std::uint64_t>& a,
                    const std::vector<std::uint64_t>& b) {
    int m = static_cast<int>(a.size()) - 1;
    int n = static_cast<int>(b.size()) - 1;
    Mat M = Mat::zero(m + n - 2, m + n - 1);
    for (int t = 0; t < n - 1; ++t)
        for (int k = 0; k <= m; ++k) M.at(t, t + k) = a[m - k];
    for (int t = 0; t < m - 1; ++t)
        for (int k = 0; k <= n; ++k) M.at(n - 1 + t, t + k) = b[n - k];
    return M;
}

std::uint64_t det_minor(const Field& F, const Mat& M,
                        const std::vector<std::size_t>& cols) {
    Mat S = Mat::zero(M.n_rows, cols.size());
    for (std::size_t i = 0; i < M.n_rows; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            S.at(i, j) = M.at(i, cols[j]);
    return la::det(F, S);
}

// Fraction-free (Bareiss) determinant of a matrix with UPoly entries; exact
// over the integral domain F_p[S].  Used when F_p is too small for
// evaluation/interpolation.
UPoly det_bareiss(const Field& F, std::vector<std::vector<UPoly>> M) {
    std::size_t n = M.size();
    if (n == 0) return up::one();
    bool negate = false;
    UPoly prev = up::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && up::is_zero(M[piv][k])) ++piv;
        if (piv == n) return up::zero();
        if (piv != k) {
            std::swap(M[piv], M[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                UPoly t = up::sub(F, up::mul(F, M[k][k], M[i][j]),
                                  up::mul(F, M[i][k], M[k][j]));
                M[i][j] = up::exact_div(F, t, prev);
            }
            M[i][k] = up::zero();
        }
        prev = M[k][k];
    }
    UPoly d = M[n - 1][n - 1];
    return negate ? up::neg(F, d) : d;
}

std::vector<std::vector<UPoly>> poly_minor(
    const std::vector<std::vector<UPoly>>& M,
    const std::vector<std::size_t>& cols) {
    std::vector<std::vector<UPoly>> S(M.size());
    for (std::size_t i = 0; i < M.size(); ++i) {
        S[i].reserve(cols.size());
        for (auto c : cols) S[i].push_back(M[i][c]);
    }
    return S;
}

// Sylvester / subresultant matrices with polynomial entries (same layouts as
// the specialized builders above).
std::vector<std::vector<UPoly>> sylvester_poly(const YForm& A, const YForm& B) {
    int m = A.n(), n = B.n();
    std::vector<std::vector<UPoly>> M(
        m + n, std::vector<UPoly>(m + n, up::zero()));
    for (int t = 0; t < n; ++t)
        for (int k = 0; k <= m; ++k) M[t][t + k] = A.yc[m - k];
    for (int t = 0; t < m; ++t)
        for (int k = 0; k <= n; ++k) M[n + t][t + k] = B.yc[n - k];
    return M;
}

std::vector<std::vector<UPoly>> subres1_rows_poly(const YForm& A,
                                                  const YForm& B) {
    int m = A.n(), n = B.n();
    std::vector<std::vector<UPoly>> M(
        m + n - 2, std::vector<UPoly>(m + n - 1, up::zero()));
    for (int t = 0; t < n - 1; ++t)
        for (int k = 0; k <= m; ++k) M[t][t + k] = A.yc[m - k];
    for (int t = 0; t < m - 1; ++t)
        for (int k = 0; k <= n; ++k) M[n - 1 + t][t + k] = B.yc[n - k];
    return M;
}

struct ElimRequest {
    bool want_res = false;
    bool want_s1 = false;
};

EliminationData eliminate(const Field& F, const BiPoly& Abp, const BiPoly& Bbp,
                          SmallFieldPolicy policy, ElimRequest req) {
    if (is_zero(Abp) || is_zero(Bbp))
        throw ValidationError("resultant/subresultant inputs must be nonzero");
    YForm A = to_yform(Abp), B = to_yform(Bbp);
    int m = A.n(), n = B.n();
    EliminationData out;
    if (req.want_s1 && (m < 1 || n < 1 || m + n < 3))
        throw ValidationError(
            "first subresultant needs Y-degrees >= 1 with total >= 3");
    // S-degree bound for the Sylvester determinant and all its minors.
    long long dbound = 0;
    for (const auto& c : A.yc) dbound = std::max<long long>(dbound, up::deg(c));
    long long dsa = dbound;
    dbound = 0;
    for (const auto& c : B.yc) dbound = std::max<long long>(dbound, up::deg(c));
    long long dsb = dbound;
    long long need = dsa * n + dsb * m + 1;

    const UPoly& lc_a = A.yc.back();
    const UPoly& lc_b = B.yc.back();

    // Collect evaluation points where neither leading Y-coefficient
    // vanishes; on specialization the Y-degrees then stay (m, n) and the
    // subresultant minors commute with evaluation.
    std::vector<std::uint64_t> xs;
    for (std::uint64_t s = 0; s < F.p() && static_cast<long long>(xs.size()) < need; ++s) {
        if (up::eval(F, lc_a, s) == 0 || up::eval(F, lc_b, s) == 0) continue;
        xs.push_back(s);
    }
    if (static_cast<long long>(xs.size()) < need) {
        if (policy == SmallFieldPolicy::raise_error)
            throw InsufficientFieldError(
                "field too small for resultant evaluation/interpolation");
        // Exact fraction-free fallback over F_p[S].
        if (req.want_res) out.res = det_bareiss(F, sylvester_poly(A, B));
        if (req.want_s1) {
            auto rows = subres1_rows_poly(A, B);
            std::size_t k = rows.size();
            std::vector<std::size_t> cols_lin(k), cols_const(k);
            for (std::size_t j = 0; j < k; ++j) cols_lin[j] = j;
            for (std::size_t j = 0; j + 1 < k; ++j) cols_const[j] = j;
            cols_const[k - 1] = k;  // replace the Y^1 column by the Y^0 one
            out.s1_lin = det_bareiss(F, poly_minor(rows, cols_lin));
            out.s1_const = det_bareiss(F, poly_minor(rows, cols_const));
        }
        return out;
    }

    std::vector<std::uint64_t> res_vals, a0_vals, a1_vals;
    res_vals.reserve(xs.size());
    a0_vals.reserve(xs.size());
    a1_vals.reserve(xs.size());
    std::vector<std::uint64_t> av(m + 1), bv(n + 1);
    for (auto s : xs) {
        for (int i = 0; i <= m; ++i) av[i] = up::eval(F, A.yc[i], s);
        for (int i = 0; i <= n; ++i) bv[i] = up::eval(F, B.yc[i], s);
        if (req.want_res)
            res_vals.push_back(la::det(F, sylvester_at(F, av, bv)));
        if (req.want_s1) {
            Mat rows = subres1_rows_at(F, av, bv);
            std::size_t k = rows.n_rows;
            std::vector<std::size_t> cols(k);
            for (std::size_t j = 0; j < k; ++j) cols[j] = j;
            a1_vals.push_back(det_minor(F, rows, cols));
            cols[k - 1] = k;
            a0_vals.push_back(det_minor(F, rows, cols));
        }
    }
    if (req.want_res) out.res = up::interpolate_points(F, xs, res_vals);
    if (req.want_s1) {
        out.s1_lin = up::interpolate_points(F, xs, a1_vals);
        out.s1_const = up::interpolate_points(F, xs, a0_vals);
    }
    return out;
}

}  // namespace

UPoly resultant_y(const Field& F, const BiPoly& A, const BiPoly& B,
                  SmallFieldPolicy policy) {
    return eliminate(F, A, B, policy, ElimRequest{true, false}).res;
}

std::pair<UPoly, UPoly> first_subresultant_y(const Field& F, const BiPoly& A,
                                             const BiPoly& B,
                                             SmallFieldPolicy policy) {
    auto d = eliminate(F, A, B, policy, ElimRequest{false, true});
    return {d.s1_const, d.s1_lin};
}

EliminationData elimination_data(const Field& F, const BiPoly& A,
                                 const BiPoly& B, SmallFieldPolicy policy) {
    return eliminate(F, A, B, policy, ElimRequest{true, true});
}

std::string to_string(const BiPoly& f) {
    std::ostringstream os;
    for (const auto& t : f.terms) os << t.ex << ' ' << t.ey << ' ' << t.c << '\n';
    return os.str();
}

}  // namespace bp
}  // namespace rr
