#include "roll/matrix.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace roll {

Matrix identity(std::size_t n) {
    Matrix m(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
        const double* src = a.row(i);
        for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = src[j];
    }
    return t;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul: inner dimensions differ");
    Matrix c(a.rows, b.cols, 0.0);
    // i-k-j order: the inner loop walks contiguous rows of b and c.
    for (std::size_t i = 0; i < a.rows; ++i) {
        double* crow = c.row(i);
        const double* arow = a.row(i);
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double aik = arow[k];
            if (aik == 0.0) continue;
            const double* brow = b.row(k);
            for (std::size_t j = 0; j < b.cols; ++j) crow[j] += aik * brow[j];
        }
    }
    return c;
}

Matrix matmul_bt(const Matrix& a, const Matrix& b) {
    if (a.cols != b.cols) throw std::invalid_argument("matmul_bt: inner dimensions differ");
    Matrix bt = transpose(b);
    return matmul(a, bt);
}

Vector matvec(const Matrix& a, const Vector& x) {
    if (a.cols != x.size()) throw std::invalid_argument("matvec: dimension mismatch");
    Vector y(a.rows, 0.0);
    for (std::size_t i = 0; i < a.rows; ++i) {
        const double* arow = a.row(i);
        double acc = 0.0;
        for (std::size_t j = 0; j < a.cols; ++j) acc += arow[j] * x[j];
        y[i] = acc;
    }
    return y;
}

Vector matvec_t(const Matrix& a, const Vector& x) {
    if (a.rows != x.size()) throw std::invalid_argument("matvec_t: dimension mismatch");
    Vector y(a.cols, 0.0);
    for (std::size_t i = 0; i < a.rows; ++i) {
        const double xi = x[i];
        if (xi == 0.0) continue;
        const double* arow = a.row(i);
        for (std::size_t j = 0; j < a.cols; ++j) y[j] += xi * arow[j];
    }
    return y;
}

void add_in_place(Vector& y, const Vector& x) {
    assert(y.size() == x.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += x[i];
}

void axpy(double alpha, const Vector& x, Vector& y) {
    assert(y.size() == x.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

double dot(const Vector& a, const Vector& b) {
    assert(a.size() == b.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

double norm2(const Vector& v) { return std::sqrt(squared_norm(v)); }

double norm1(const Vector& v) {
    double acc = 0.0;
    for (double x : v) acc += std::fabs(x);
    return acc;
}

double squared_norm(const Vector& v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return acc;
}

}  // namespace roll
