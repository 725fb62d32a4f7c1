/**
 * @file linalg.hpp
 * @brief Dense matrices over F_p: reduced echelon form, kernel bases,
 *        inverses, determinants and characteristic polynomials.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rr/field.hpp"
#include "rr/upoly.hpp"

namespace rr {

struct Mat {
    std::size_t n_rows = 0, n_cols = 0;
    std::vector<std::uint64_t> a;  // row major

    static Mat zero(std::size_t r, std::size_t c) {
        return Mat{r, c, std::vector<std::uint64_t>(r * c, 0)};
    }
    static Mat identity(std::size_t n);

    std::uint64_t& at(std::size_t i, std::size_t j) { return a[i * n_cols + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const {
        return a[i * n_cols + j];
    }
};

namespace la {

Mat mul(const Field& F, const Mat& A, const Mat& B);
std::vector<std::uint64_t> apply(const Field& F, const Mat& A,
                                 const std::vector<std::uint64_t>& x);

/// In-place reduced row echelon form; returns the pivot column indices.
/// Deterministic: pivots are the first nonzero entry scanning rows top-down.
std::vector<std::size_t> rref(const Field& F, Mat& M);

/// Basis of the right kernel {x : Mx = 0}.  Vectors are normalized so the
/// coordinate of the defining free column is 1; ordered by free column index.
std::vector<std::vector<std::uint64_t>> kernel_basis(const Field& F, Mat M);

std::optional<Mat> inverse(const Field& F, Mat M);

std::uint64_t det(const Field& F, Mat M);

/// Monic characteristic polynomial det(S*I - M) via a similarity reduction to
/// Hessenberg form followed by the standard last-column recurrence; O(n^3)
/// field operations, deterministic.  char_poly of the empty matrix is 1.
UPoly char_poly(const Field& F, const Mat& M);

}  // namespace la
}  // namespace rr
