#pragma once

#include <cstddef>
#include <vector>

#include "asymcg/gaussian_rational.hpp"
#include "asymcg/hom_class.hpp"

namespace asymcg {

namespace detail {
inline bool entry_is_zero(const BigInt& x) { return x == 0; }
inline bool entry_is_zero(const GaussianRational& x) { return x.is_zero(); }
} // namespace detail

/// Dense row-major matrix, exact entries (BigInt or GaussianRational).
/// Products skip zero entries: operators in this codebase are sparse
/// (transvections, permutations), which keeps word-length campaigns fast.
template <class T>
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Mat operator*(const Mat& o) const {
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& x = at(i, k);
                if (detail::entry_is_zero(x)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const T& y = o.at(k, j);
                    if (detail::entry_is_zero(y)) continue;
                    r.at(i, j) += x * y;
                }
            }
        return r;
    }

    Mat operator-(const Mat& o) const {
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    Mat transposed() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(at(i, j) == T(i == j ? 1 : 0))) return false;
        return true;
    }

    bool operator==(const Mat&) const = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using IntMat = Mat<BigInt>;
using GrMat = Mat<GaussianRational>;

inline GrMat to_gr(const IntMat& m) {
    GrMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.at(i, j) = GaussianRational(BigRational(m.at(i, j)));
    return r;
}

inline GrMat conj(const GrMat& m) {
    GrMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).conj();
    return r;
}

/// Conjugate transpose (the adjoint w.r.t. the hermitian scalar product).
inline GrMat adjoint(const GrMat& m) { return conj(m).transposed(); }

/// Exact determinant by fraction-free-ish Gaussian elimination over Q(i).
GaussianRational det(GrMat m);

/// Exact rank over Q(i).
std::size_t rank(GrMat m);

/// Exact inverse; throws Error(Internal) when singular.
GrMat inverse(const GrMat& m);

/// Standard symplectic Gram matrix on interleaved (a_1, b_1, ..., a_m, b_m):
/// J a = -b, J b = a per 2x2 block; omega(u, v) = <u, J v>.
IntMat j_gram(std::size_t wrist_count);

} // namespace asymcg
