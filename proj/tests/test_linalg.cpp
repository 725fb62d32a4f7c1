/**
 * @file test_linalg.cpp
 * @brief Dense exact linear algebra over F_p.
 */
#include "doctest.h"
#include "helpers.hpp"
#include "rr/linalg.hpp"

using namespace rr;
using testutil::char_poly_naive;

namespace {

Mat random_mat(const Field& F, Rng& rng, std::size_t r, std::size_t c) {
    Mat M = Mat::zero(r, c);
    for (auto& x : M.a) x = rng.below(F.p());
    return M;
}

// Evaluate a polynomial at a square matrix (for Cayley-Hamilton).
Mat eval_at_matrix(const Field& F, const UPoly& f, const Mat& M) {
    std::size_t n = M.n_rows;
    Mat acc = Mat::zero(n, n), power = Mat::identity(n);
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        for (std::size_t k = 0; k < n * n; ++k)
            acc.a[k] = F.add(acc.a[k], F.mul(f.c[i], power.a[k]));
        power = la::mul(F, power, M);
    }
    return acc;
}

bool is_zero_mat(const Mat& M) {
    for (auto x : M.a)
        if (x != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("matrix product and apply agree") {
    Field F(13);
    Rng rng(11);
    Mat A = random_mat(F, rng, 4, 6), B = random_mat(F, rng, 6, 3);
    Mat C = la::mul(F, A, B);
    REQUIRE(C.n_rows == 4);
    REQUIRE(C.n_cols == 3);
    // column j of A*B equals A applied to column j of B
    for (std::size_t j = 0; j < 3; ++j) {
        std::vector<std::uint64_t> col(6);
        for (std::size_t i = 0; i < 6; ++i) col[i] = B.at(i, j);
        auto want = la::apply(F, A, col);
        for (std::size_t i = 0; i < 4; ++i) CHECK(C.at(i, j) == want[i]);
    }
    Mat I = Mat::identity(6);
    CHECK(la::mul(F, A, I).a == A.a);
}

TEST_CASE("rref pivots and kernel dimension") {
    Field F(7);
    Rng rng(12);
    for (int t = 0; t < 30; ++t) {
        std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
        Mat M = random_mat(F, rng, r, c);
        Mat R = M;
        auto pivots = la::rref(F, R);
        std::size_t rank = pivots.size();
        auto kernel = la::kernel_basis(F, M);
        CHECK(kernel.size() == c - rank);  // rank-nullity
        for (const auto& k : kernel) {
            auto img = la::apply(F, M, k);
            for (auto x : img) CHECK(x == 0);
            bool nonzero = false;
            for (auto x : k) nonzero = nonzero || x != 0;
            CHECK(nonzero);
        }
        // rref is idempotent
        Mat R2 = R;
        la::rref(F, R2);
        CHECK(R2.a == R.a);
    }
}

TEST_CASE("inverse round trip and singularity") {
    Field F(13);
    Rng rng(13);
    int inverted = 0;
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + rng.below(5);
        Mat M = random_mat(F, rng, n, n);
        auto inv = la::inverse(F, M);
        if (la::det(F, M) == 0) {
            CHECK(!inv.has_value());
            continue;
        }
        ++inverted;
        REQUIRE(inv.has_value());
        CHECK(la::mul(F, M, *inv).a == Mat::identity(n).a);
        CHECK(la::mul(F, *inv, M).a == Mat::identity(n).a);
    }
    CHECK(inverted > 10);
}

TEST_CASE("determinant is multiplicative and alternating") {
    Field F(13);
    Rng rng(14);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + rng.below(5);
        Mat A = random_mat(F, rng, n, n), B = random_mat(F, rng, n, n);
        CHECK(la::det(F, la::mul(F, A, B)) ==
              F.mul(la::det(F, A), la::det(F, B)));
        if (n >= 2) {
            Mat S = A;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(S.at(0, j), S.at(1, j));
            CHECK(la::det(F, S) == F.neg(la::det(F, A)));
        }
    }
    // triangular determinant
    Mat T = Mat::zero(3, 3);
    T.at(0, 0) = 2; T.at(1, 1) = 3; T.at(2, 2) = 4;
    T.at(0, 1) = 5; T.at(0, 2) = 6; T.at(1, 2) = 1;
    CHECK(la::det(F, T) == (2 * 3 * 4) % 13);
}

TEST_CASE("char_poly matches the cofactor oracle and Cayley-Hamilton") {
    for (std::uint64_t p : {7ull, 11ull, 13ull}) {
        Field F(p);
        Rng rng(15 + p);
        for (int t = 0; t < 25; ++t) {
            std::size_t n = 1 + rng.below(5);
            Mat M = random_mat(F, rng, n, n);
            UPoly cp = la::char_poly(F, M);
            CHECK(cp == char_poly_naive(F, M));
            CHECK(up::deg(cp) == static_cast<int>(n));
            CHECK(up::lc(cp) == 1);
            CHECK(is_zero_mat(eval_at_matrix(F, cp, M)));
        }
    }
}

TEST_CASE("char_poly of a companion matrix is the defining polynomial") {
    Field F(7);
    // f = S^3 + 2S^2 + 3S + 4; companion matrix has -coefficients in the
    // last column and shifts below the diagonal
    UPoly f = testutil::P({4, 3, 2, 1});
    Mat M = Mat::zero(3, 3);
    M.at(1, 0) = 1;
    M.at(2, 1) = 1;
    M.at(0, 2) = F.neg(4);
    M.at(1, 2) = F.neg(3);
    M.at(2, 2) = F.neg(2);
    CHECK(la::char_poly(F, M) == f);
}
