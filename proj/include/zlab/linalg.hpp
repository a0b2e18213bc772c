#ifndef ZLAB_LINALG_HPP
#define ZLAB_LINALG_HPP

#include <vector>

#include "zlab/bigint.hpp"

namespace zlab {

// Dense matrix of exact rationals, row-major.
struct QMatrix {
    int rows = 0, cols = 0;
    std::vector<Rational> a;

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}
    Rational& at(int i, int j) { return a[(size_t)i * cols + j]; }
    const Rational& at(int i, int j) const { return a[(size_t)i * cols + j]; }

    static QMatrix identity(int n) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }
};

QMatrix matmul(const QMatrix& x, const QMatrix& y);

// Basis of the right nullspace.
std::vector<std::vector<Rational>> nullspace(QMatrix m);

// Inverse; empty optional when singular.
bool try_inverse(QMatrix m, QMatrix& out);

std::vector<Rational> matvec(const QMatrix& m, const std::vector<Rational>& v);

}  // namespace zlab

#endif
