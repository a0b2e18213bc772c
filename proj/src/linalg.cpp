#include "zlab/linalg.hpp"

namespace zlab {

QMatrix matmul(const QMatrix& x, const QMatrix& y) {
    QMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x.at(i, k).is_zero()) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return r;
}

std::vector<Rational> matvec(const QMatrix& m, const std::vector<Rational>& v) {
    std::vector<Rational> r(m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (!m.at(i, j).is_zero()) r[i] += m.at(i, j) * v[j];
    return r;
}

// Row echelon; returns pivot column per row.
static std::vector<int> echelon(QMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int i = row; i < m.rows; ++i)
            if (!m.at(i, col).is_zero()) { p = i; break; }
        if (p < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(p, j));
        Rational inv = Rational(1) / m.at(row, col);
        for (int j = col; j < m.cols; ++j) m.at(row, j) = m.at(row, j) * inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Rational f = m.at(i, col);
            for (int j = col; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Rational>> nullspace(QMatrix m) {
    int n = m.cols;
    std::vector<int> pivots = echelon(m);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(n);
        v[free] = Rational(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at((int)r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool try_inverse(QMatrix m, QMatrix& out) {
    if (m.rows != m.cols) return false;
    int n = m.rows;
    QMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Rational(1);
    }
    std::vector<int> pivots = echelon(aug);
    if ((int)pivots.size() != n || pivots.back() != n - 1) return false;
    out = QMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return true;
}

}  // namespace zlab
