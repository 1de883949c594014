#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rrp {

/// Dense row-major matrix over an exact scalar type.
template <typename Scalar>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) {
            return;
        }
        for (std::size_t j = 0; j < cols_; ++j) {
            std::swap((*this)(a, j), (*this)(b, j));
        }
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/*
 * Fraction-free (Bareiss) elimination. Every division in the update
 *   a_ij <- (a_kk a_ij - a_ik a_kj) / prev_pivot
 * is exact over an integral domain, so the determinant comes out with no
 * rational intermediates. Row swaps flip the sign.
 */
template <typename Scalar>
Scalar determinant_bareiss(Matrix<Scalar> a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("determinant_bareiss: matrix is not square");
    }
    const std::size_t n = a.rows();
    if (n == 0) {
        return Scalar(1);
    }
    Scalar sign(1);
    Scalar prev_pivot(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && a(swap_with, k) == 0) {
                ++swap_with;
            }
            if (swap_with == n) {
                return Scalar(0);
            }
            a.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev_pivot;
            }
            a(i, k) = 0;
        }
        prev_pivot = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

/// Index in Z^cols of the lattice spanned by the rows (0 if not full rank).
/// Integer row reduction by Euclid on each column; Scalar must support % and /.
template <typename Scalar>
Scalar lattice_index(Matrix<Scalar> a) {
    const std::size_t n = a.cols();
    std::size_t pivot_row = 0;
    Scalar index(1);
    for (std::size_t col = 0; col < n; ++col) {
        // Collapse column `col` among rows >= pivot_row to a single nonzero entry.
        for (;;) {
            std::size_t best = a.rows();
            for (std::size_t i = pivot_row; i < a.rows(); ++i) {
                if (a(i, col) != 0 && (best == a.rows() || abs(a(i, col)) < abs(a(best, col)))) {
                    best = i;
                }
            }
            if (best == a.rows()) {
                return Scalar(0);
            }
            a.swap_rows(pivot_row, best);
            bool done = true;
            for (std::size_t i = pivot_row + 1; i < a.rows(); ++i) {
                if (a(i, col) == 0) {
                    continue;
                }
                Scalar q = a(i, col) / a(pivot_row, col);
                for (std::size_t j = col; j < n; ++j) {
                    a(i, j) -= q * a(pivot_row, j);
                }
                if (a(i, col) != 0) {
                    done = false;
                }
            }
            if (done) {
                break;
            }
        }
        index *= abs(a(pivot_row, col));
        ++pivot_row;
    }
    return index;
}

}  // namespace rrp
