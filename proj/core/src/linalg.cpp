#include "rr/linalg.hpp"

#include <utility>

namespace rr {

Mat Mat::identity(std::size_t n) {
    Mat m = zero(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

namespace la {

Mat mul(const Field& F, const Mat& A, const Mat& B) {
    if (A.n_cols != B.n_rows) throw Error("matrix product shape mismatch");
    Mat C = Mat::zero(A.n_rows, B.n_cols);
    for (std::size_t i = 0; i < A.n_rows; ++i)
        for (std::size_t k = 0; k < A.n_cols; ++k) {
            std::uint64_t a = A.at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < B.n_cols; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(a, B.at(k, j)));
        }
    return C;
}

std::vector<std::uint64_t> apply(const Field& F, const Mat& A,
                                 const std::vector<std::uint64_t>& x) {
    if (A.n_cols != x.size()) throw Error("matrix apply shape mismatch");
    std::vector<std::uint64_t> y(A.n_rows, 0);
    for (std::size_t i = 0; i < A.n_rows; ++i) {
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < A.n_cols; ++j)
            s = F.add(s, F.mul(A.at(i, j), x[j]));
        y[i] = s;
    }
    return y;
}

std::vector<std::size_t> rref(const Field& F, Mat& M) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < M.n_cols && row < M.n_rows; ++col) {
        std::size_t piv = row;
        while (piv < M.n_rows && M.at(piv, col) == 0) ++piv;
        if (piv == M.n_rows) continue;
        if (piv != row)
            for (std::size_t j = 0; j < M.n_cols; ++j)
                std::swap(M.at(piv, j), M.at(row, j));
        std::uint64_t s = F.inv(M.at(row, col));
        for (std::size_t j = col; j < M.n_cols; ++j)
            M.at(row, j) = F.mul(M.at(row, j), s);
        for (std::size_t i = 0; i < M.n_rows; ++i) {
            if (i == row) continue;
            std::uint64_t f = M.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = col; j < M.n_cols; ++j)
                M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<std::uint64_t>> kernel_basis(const Field& F, Mat M) {
    std::size_t n = M.n_cols;
    auto pivots = rref(F, M);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint64_t> w(n, 0);
        w[free] = 1;  // normalization: the free coordinate is 1
        for (std::size_t r = 0; r < pivots.size(); ++r)
            w[pivots[r]] = F.neg(M.at(r, free));
        basis.push_back(std::move(w));
    }
    return basis;
}

std::optional<Mat> inverse(const Field& F, Mat M) {
    if (M.n_rows != M.n_cols) throw Error("inverse of non-square matrix");
    std::size_t n = M.n_rows;
    Mat aug = Mat::zero(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = M.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto pivots = rref(F, aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Mat inv = Mat::zero(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::uint64_t det(const Field& F, Mat M) {
    if (M.n_rows != M.n_cols) throw Error("determinant of non-square matrix");
    std::size_t n = M.n_rows;
    std::uint64_t d = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && M.at(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j)
                std::swap(M.at(piv, j), M.at(col, j));
            d = F.neg(d);
        }
        std::uint64_t pv = M.at(col, col);
        d = F.mul(d, pv);
        std::uint64_t s = F.inv(pv);
        for (std::size_t i = col + 1; i < n; ++i) {
            std::uint64_t f = F.mul(M.at(i, col), s);
            if (f == 0) continue;
            for (std::size_t j = col; j < n; ++j)
                M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(col, j)));
        }
    }
    return d;
}

UPoly char_poly(const Field& F, const Mat& M0) {
    if (M0.n_rows != M0.n_cols) throw Error("char_poly of non-square matrix");
    std::size_t n = M0.n_rows;
    if (n == 0) return up::one();
    Mat H = M0;
    // Similarity reduction to upper Hessenberg form with row/column pivoting.
    for (std::size_t m = 0; m + 2 < n; ++m) {
        std::size_t piv = m + 1;
        while (piv < n && H.at(piv, m) == 0) ++piv;
        if (piv == n) continue;
        if (piv != m + 1) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(H.at(piv, j), H.at(m + 1, j));
            for (std::size_t i = 0; i < n; ++i)
                std::swap(H.at(i, piv), H.at(i, m + 1));
        }
        std::uint64_t s = F.inv(H.at(m + 1, m));
        for (std::size_t i = m + 2; i < n; ++i) {
            std::uint64_t f = F.mul(H.at(i, m), s);
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                H.at(i, j) = F.sub(H.at(i, j), F.mul(f, H.at(m + 1, j)));
            for (std::size_t i2 = 0; i2 < n; ++i2)
                H.at(i2, m + 1) = F.add(H.at(i2, m + 1), F.mul(f, H.at(i2, i)));
        }
    }
    // p_m(S) = (S - H[m][m]) p_{m-1}(S)
    //          - sum_i H[i][m] * (prod of subdiagonals between) * p_{i-1}(S),
    // expanding det(S*I - H) along the last column of each leading block.
    std::vector<UPoly> p(n + 1);
    p[0] = up::one();
    for (std::size_t m = 1; m <= n; ++m) {
        UPoly lin = up::from_coeffs({F.neg(H.at(m - 1, m - 1)), 1});
        UPoly acc = up::mul(F, lin, p[m - 1]);
        std::uint64_t run = 1;
        for (std::size_t i = m - 1; i-- > 0;) {
            run = F.mul(run, H.at(i + 1, i));
            if (run == 0) break;
            std::uint64_t coef = F.mul(H.at(i, m - 1), run);
            if (coef != 0) acc = up::sub(F, acc, up::scale(F, p[i], coef));
        }
        p[m] = std::move(acc);
    }
    return p[n];
}

}  // namespace la
}  // namespace rr
