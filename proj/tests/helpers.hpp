/**
 * @file helpers.hpp
 * @brief Shared test fixtures: curve builders, polynomial literals, naive
 *        determinant oracles and temp-file utilities.
 */
#pragma once

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rr/divisor.hpp"
#include "rr/linalg.hpp"
#include "rr/rrspace.hpp"

namespace testutil {

using namespace rr;

/// Coefficient-list literal, ascending degree.
inline UPoly P(std::initializer_list<std::uint64_t> c) {
    return up::from_coeffs(std::vector<std::uint64_t>(c));
}

// ----- fixture curves -------------------------------------------------------

/// x^2 + y^2 - 1: smooth conic, genus 0.
inline Curve conic(std::uint64_t p) {
    Field F(p);
    BiPoly q = bp::normalize(
        F, {BiTerm{2, 0, 1}, BiTerm{0, 2, 1}, BiTerm{0, 0, F.from_int(-1)}});
    return make_curve(F, q, NodalDivisor{});
}

/// x^3 + y^3 + 1: smooth Fermat cubic, genus 1 (for p != 3).
inline Curve fermat_cubic(std::uint64_t p) {
    Field F(p);
    BiPoly q =
        bp::normalize(F, {BiTerm{3, 0, 1}, BiTerm{0, 3, 1}, BiTerm{0, 0, 1}});
    return make_curve(F, q, NodalDivisor{});
}

/// x^5 + y^5 + 1: smooth Fermat quintic, genus 6 (for p != 5).
inline Curve fermat_quintic(std::uint64_t p) {
    Field F(p);
    BiPoly q =
        bp::normalize(F, {BiTerm{5, 0, 1}, BiTerm{0, 5, 1}, BiTerm{0, 0, 1}});
    return make_curve(F, q, NodalDivisor{});
}

/// x^2 - y^2 + x^3 + y^4: one node at the origin with tangent cone
/// x^2 - y^2; genus 2 over F_7.
inline BiPoly node_quartic_poly(const Field& F) {
    return bp::normalize(F, {BiTerm{2, 0, 1}, BiTerm{0, 2, F.from_int(-1)},
                             BiTerm{3, 0, 1}, BiTerm{0, 4, 1}});
}

inline Curve node_quartic(std::uint64_t p, Rng& rng, const RandomConfig& cfg) {
    Field F(p);
    BiPoly q = node_quartic_poly(F);
    return make_curve(F, q, nodal_precompute(F, q, rng, cfg));
}

/// x^2 - y^2 + y^4 - x^3 + x^10 - 5 y^10 + 3 x^3 y^7: nodal degree-10 curve.
/// Over F_65521 it has a single node at the origin (genus 35); over F_7 two
/// extra conjugate nodes at (0, +-i), i^2 = -1, appear (genus 33).
inline BiPoly decic_poly(const Field& F) {
    return bp::normalize(
        F, {BiTerm{2, 0, 1}, BiTerm{0, 2, F.from_int(-1)}, BiTerm{0, 4, 1},
            BiTerm{3, 0, F.from_int(-1)}, BiTerm{10, 0, 1},
            BiTerm{0, 10, F.from_int(-5)}, BiTerm{3, 7, 3}});
}

inline Curve decic(std::uint64_t p, Rng& rng, const RandomConfig& cfg) {
    Field F(p);
    BiPoly q = decic_poly(F);
    return make_curve(F, q, nodal_precompute(F, q, rng, cfg));
}

// ----- naive determinant oracles -------------------------------------------

/// Laplace expansion along the first column; exact over F_p[S].  Quadratic
/// blowup limits it to the small matrices the oracles need (n <= 7).
inline UPoly laplace_det(const Field& F, const std::vector<std::vector<UPoly>>& M) {
    std::size_t n = M.size();
    if (n == 0) return up::one();
    if (n == 1) return M[0][0];
    UPoly acc;
    for (std::size_t i = 0; i < n; ++i) {
        if (up::is_zero(M[i][0])) continue;
        std::vector<std::vector<UPoly>> sub;
        sub.reserve(n - 1);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            std::vector<UPoly> row(M[r].begin() + 1, M[r].end());
            sub.push_back(std::move(row));
        }
        UPoly term = up::mul(F, M[i][0], laplace_det(F, sub));
        acc = (i % 2 == 0) ? up::add(F, acc, term) : up::sub(F, acc, term);
    }
    return acc;
}

/// Sylvester matrix over F_p[S] of A and B as polynomials in Y:
/// deg_Y B rows of A-shifts, then deg_Y A rows of B-shifts, columns in
/// descending Y-degree.
inline std::vector<std::vector<UPoly>> sylvester_naive(const Field&,
                                                       const BiPoly& A,
                                                       const BiPoly& B) {
    auto a = bp::y_coeffs(A);
    auto b = bp::y_coeffs(B);
    int m = static_cast<int>(a.size()) - 1;
    int n = static_cast<int>(b.size()) - 1;
    std::vector<std::vector<UPoly>> M(m + n,
                                      std::vector<UPoly>(m + n, up::zero()));
    for (int t = 0; t < n; ++t)
        for (int k = 0; k <= m; ++k) M[t][t + k] = a[m - k];
    for (int t = 0; t < m; ++t)
        for (int k = 0; k <= n; ++k) M[n + t][t + k] = b[n - k];
    return M;
}

inline UPoly resultant_naive(const Field& F, const BiPoly& A, const BiPoly& B) {
    return laplace_det(F, sylvester_naive(F, A, B));
}

/// First-subresultant coefficients (constant, linear) as determinants of the
/// two square minors of the reduced Sylvester rows (one fewer shift of each
/// input, columns Y^{m+n-2}..Y^0).
inline std::pair<UPoly, UPoly> subres1_naive(const Field& F, const BiPoly& A,
                                             const BiPoly& B) {
    auto a = bp::y_coeffs(A);
    auto b = bp::y_coeffs(B);
    int m = static_cast<int>(a.size()) - 1;
    int n = static_cast<int>(b.size()) - 1;
    int rows = m + n - 2, cols = m + n - 1;
    std::vector<std::vector<UPoly>> M(rows,
                                      std::vector<UPoly>(cols, up::zero()));
    for (int t = 0; t < n - 1; ++t)
        for (int k = 0; k <= m; ++k) M[t][t + k] = a[m - k];
    for (int t = 0; t < m - 1; ++t)
        for (int k = 0; k <= n; ++k) M[n - 1 + t][t + k] = b[n - k];
    auto minor = [&](bool keep_linear) {
        std::vector<std::vector<UPoly>> S(rows);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j + 1 < cols; ++j)
                // drop either the Y^1 column (index cols-2) or the Y^0 one
                S[i].push_back(M[i][j + (keep_linear || j + 2 < cols ? 0 : 1)]);
        }
        return S;
    };
    UPoly lin = laplace_det(F, minor(true));
    UPoly cst = laplace_det(F, minor(false));
    return {cst, lin};
}

/// Characteristic polynomial oracle: Laplace determinant of S*I - M.
inline UPoly char_poly_naive(const Field& F, const Mat& M) {
    std::size_t n = M.n_rows;
    std::vector<std::vector<UPoly>> SM(n, std::vector<UPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            UPoly e = up::from_coeffs({F.neg(M.at(i, j)), i == j ? 1ull : 0ull});
            SM[i][j] = e;
        }
    return laplace_det(F, SM);
}

// ----- misc -----------------------------------------------------------------

/// Random nonzero bivariate polynomial with x_deg <= dx, y_deg <= dy.
inline BiPoly random_bipoly(const Field& F, Rng& rng, int dx, int dy) {
    for (;;) {
        std::vector<BiTerm> terms;
        for (int i = 0; i <= dx; ++i)
            for (int j = 0; j <= dy; ++j)
                terms.push_back(BiTerm{static_cast<std::uint32_t>(i),
                                       static_cast<std::uint32_t>(j),
                                       rng.below(F.p())});
        BiPoly f = bp::normalize(F, std::move(terms));
        if (!bp::is_zero(f)) return f;
    }
}

inline UPoly random_upoly(const Field& F, Rng& rng, int deg) {
    std::vector<std::uint64_t> c(deg + 1);
    for (auto& x : c) x = rng.below(F.p());
    return up::from_coeffs(std::move(c));
}

/// Fresh scratch directory under the system temp root.
class TempDir {
public:
    TempDir() {
        auto base = std::filesystem::temp_directory_path();
        for (int i = 0;; ++i) {
            path_ = base / ("rrtest-" + std::to_string(::getpid()) + "-" +
                            std::to_string(counter_++) + "-" +
                            std::to_string(i));
            std::error_code ec;
            if (std::filesystem::create_directory(path_, ec)) break;
        }
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    std::string file(const std::string& name) const {
        return (path_ / name).string();
    }

private:
    static inline int counter_ = 0;
    std::filesystem::path path_;
};

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    os << text;
}

inline std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

}  // namespace testutil
