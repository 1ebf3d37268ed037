#include "asymcg/matrix.hpp"

namespace asymcg {

GaussianRational det(GrMat m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::Internal, "det: non-square matrix");
    std::size_t n = m.rows();
    GaussianRational result(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return GaussianRational(0);
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            result = -result;
        }
        const GaussianRational p = m.at(col, col);
        result *= p;
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            GaussianRational f = m.at(i, col) / p;
            for (std::size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return result;
}

std::size_t rank(GrMat m) {
    std::size_t n = m.rows(), c = m.cols(), r = 0;
    for (std::size_t col = 0; col < c && r < n; ++col) {
        std::size_t pivot = r;
        while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) continue;
        if (pivot != r)
            for (std::size_t j = col; j < c; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        const GaussianRational p = m.at(r, col);
        for (std::size_t i = r + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            GaussianRational f = m.at(i, col) / p;
            for (std::size_t j = col; j < c; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

GrMat inverse(const GrMat& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::Internal, "inverse: non-square matrix");
    std::size_t n = m.rows();
    GrMat a = m;
    GrMat inv = GrMat::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw Error(ErrorKind::Internal, "inverse: singular matrix");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        GaussianRational p = a.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) = a.at(col, j) / p;
            inv.at(col, j) = inv.at(col, j) / p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            GaussianRational f = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

IntMat j_gram(std::size_t wrist_count) {
    IntMat j(2 * wrist_count, 2 * wrist_count);
    for (std::size_t k = 0; k < wrist_count; ++k) {
        j.at(2 * k, 2 * k + 1) = 1;
        j.at(2 * k + 1, 2 * k) = -1;
    }
    return j;
}

} // namespace asymcg
