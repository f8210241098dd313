#pragma once

#include <cstddef>
#include <vector>

namespace roll {

using Vector = std::vector<double>;

// Dense row-major matrix. This is the only tensor type in the library;
// everything the certification and training code needs reduces to a
// handful of products below.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    double* row(std::size_t i) { return data.data() + i * cols; }
    const double* row(std::size_t i) const { return data.data() + i * cols; }

    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
};

Matrix identity(std::size_t n);
Matrix transpose(const Matrix& a);

// c = a * b
Matrix matmul(const Matrix& a, const Matrix& b);
// c = a * b^T  (b is transposed once internally so the hot loop stays
// unit-stride; accumulation order is fixed, results are bit-reproducible)
Matrix matmul_bt(const Matrix& a, const Matrix& b);

// y = a * x
Vector matvec(const Matrix& a, const Vector& x);
// y = a^T * x, computed as a sum of scaled rows of a
Vector matvec_t(const Matrix& a, const Vector& x);

void add_in_place(Vector& y, const Vector& x);
void axpy(double alpha, const Vector& x, Vector& y);  // y += alpha * x
double dot(const Vector& a, const Vector& b);
double norm2(const Vector& v);
double norm1(const Vector& v);
double squared_norm(const Vector& v);

}  // namespace roll
