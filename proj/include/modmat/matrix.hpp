#pragma once

#include <optional>
#include <vector>

#include "modmat/errors.hpp"
#include "modmat/field.hpp"

namespace modmat {

// Dense rectangular matrix over an exact field F (needs +,-,*,/, ==,
// is_zero(), and construction from long).
template <class F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    F& operator()(int i, int j) { return a_[i * cols_ + j]; }
    const F& operator()(int i, int j) const { return a_[i * cols_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) fail("DimensionMismatch", "matrix product shapes");
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (is_zero(a(i, k))) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    // Fraction-free (Bareiss) determinant; divisions are exact.
    F det() const {
        if (rows_ != cols_) fail("DimensionMismatch", "determinant of non-square matrix");
        const int n = rows_;
        if (n == 0) return F(1);
        Matrix m = *this;
        F prev(1);
        int sign = 1;
        for (int k = 0; k + 1 < n; ++k) {
            if (is_zero(m(k, k))) {
                int p = k + 1;
                while (p < n && is_zero(m(p, k))) ++p;
                if (p == n) return F(0);
                for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j)
                    m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            prev = m(k, k);
        }
        F d = m(n - 1, n - 1);
        return sign < 0 ? -d : d;
    }

    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) fail("DimensionMismatch", "inverse of non-square matrix");
        auto sol = linear_solve_impl(*this, identity(rows_));
        if (!sol) return std::nullopt;
        return sol;
    }

private:
    template <class G>
    friend std::optional<Matrix<G>> linear_solve_impl(Matrix<G> a, Matrix<G> b);

    int rows_, cols_;
    std::vector<F> a_;
};

// Exact Gaussian elimination on the augmented system [A | B]; returns one
// solution X with A*X = B (free variables set to 0), or nullopt when the
// system is inconsistent.
template <class F>
std::optional<Matrix<F>> linear_solve_impl(Matrix<F> a, Matrix<F> b) {
    const int m = a.rows(), n = a.cols(), w = b.cols();
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int p = r;
        while (p < m && is_zero(a(p, c))) ++p;
        if (p == m) continue;
        if (p != r) {
            for (int j = 0; j < n; ++j) std::swap(a(r, j), a(p, j));
            for (int j = 0; j < w; ++j) std::swap(b(r, j), b(p, j));
        }
        F inv = F(1) / a(r, c);
        for (int j = c; j < n; ++j) a(r, j) = a(r, j) * inv;
        for (int j = 0; j < w; ++j) b(r, j) = b(r, j) * inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || is_zero(a(i, c))) continue;
            F f = a(i, c);
            for (int j = c; j < n; ++j) a(i, j) = a(i, j) - f * a(r, j);
            for (int j = 0; j < w; ++j) b(i, j) = b(i, j) - f * b(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    // inconsistency: zero row of A with nonzero rhs
    for (int i = r; i < m; ++i)
        for (int j = 0; j < w; ++j)
            if (!is_zero(b(i, j))) return std::nullopt;
    Matrix<F> x(n, w);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < w; ++j) x(pivot_col[i], j) = b(i, j);
    return x;
}

template <class F>
struct LinearSolveResult {
    bool solvable = false;
    Matrix<F> solution; // valid when solvable
};

// Spec surface: exact solve A x = b, or a NoSolution certificate.
template <class F>
LinearSolveResult<F> linear_solve(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows()) fail("DimensionMismatch", "linear_solve: row counts differ");
    auto sol = linear_solve_impl(a, b);
    if (!sol) return {false, Matrix<F>()};
    return {true, *sol};
}

} // namespace modmat
