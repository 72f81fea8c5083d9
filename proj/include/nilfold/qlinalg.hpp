#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "nilfold/rational.hpp"

namespace nilfold {

// Dense exact-rational matrix, just big enough for the graded operator
// work (dimensions stay <= dim P_6 = 84).
class MatQ {
  public:
    MatQ() = default;
    MatQ(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    static MatQ identity(int n) {
        MatQ m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    friend MatQ operator*(const MatQ& a, const MatQ& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("MatQ: shape mismatch");
        MatQ r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (int j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }

    std::vector<Rational> apply(const std::vector<Rational>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("MatQ: vector size");
        std::vector<Rational> y(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (v != 0) return false;
        return true;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

struct Rref {
    MatQ mat;                    // reduced row echelon form
    std::vector<int> pivot_cols; // one per pivot row
    int rank = 0;
};

// Exact Gauss-Jordan elimination; pivot = first nonzero entry in column order.
inline Rref rref(MatQ m) {
    Rref out;
    const int R = m.rows(), C = m.cols();
    int row = 0;
    for (int col = 0; col < C && row < R; ++col) {
        int piv = -1;
        for (int r = row; r < R; ++r)
            if (m(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < C; ++c) std::swap(m(piv, c), m(row, c));
        Rational inv = m(row, col);
        for (int c = 0; c < C; ++c) m(row, c) /= inv;
        for (int r = 0; r < R; ++r) {
            if (r == row || m(r, col) == 0) continue;
            Rational f = m(r, col);
            for (int c = 0; c < C; ++c) m(r, c) -= f * m(row, c);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.rank = row;
    out.mat = std::move(m);
    return out;
}

inline int rank_of(const MatQ& m) { return rref(m).rank; }

// Null-space basis vectors (one per free column), deterministic: the free
// variable of vector k is set to 1, the rest to 0.
inline std::vector<std::vector<Rational>> kernel_vectors(const MatQ& m) {
    Rref r = rref(m);
    const int C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (int c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < C; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(C);
        v[free] = 1;
        for (int prow = 0; prow < r.rank; ++prow) {
            int pcol = r.pivot_cols[prow];
            v[pcol] = -r.mat(prow, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Indices of a column basis of the image (pivot columns of the original matrix).
inline std::vector<int> image_column_indices(const MatQ& m) { return rref(m).pivot_cols; }

// Particular solution of A x = b with free variables set to zero;
// nullopt when inconsistent.
inline std::optional<std::vector<Rational>> solve(const MatQ& A, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != A.rows()) throw std::invalid_argument("solve: size mismatch");
    MatQ aug(A.rows(), A.cols() + 1);
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
        aug(i, A.cols()) = b[i];
    }
    Rref r = rref(std::move(aug));
    for (int prow = 0; prow < r.rank; ++prow)
        if (r.pivot_cols[prow] == A.cols()) return std::nullopt;  // 0 = 1 row
    std::vector<Rational> x(A.cols());
    for (int prow = 0; prow < r.rank; ++prow) x[r.pivot_cols[prow]] = r.mat(prow, A.cols());
    return x;
}

}  // namespace nilfold
