#pragma once

#include <cstddef>
#include <vector>

namespace mhae {

/// Dense row-major matrix of doubles; the only numeric container in the
/// library. Treated as an immutable value once an operation returns it.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;  // row-major, rows*cols entries

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    std::size_t size() const { return rows * cols; }

    const double* row(std::size_t i) const { return data.data() + i * cols; }
    double* row(std::size_t i) { return data.data() + i * cols; }

    bool same_shape(const Matrix& other) const {
        return rows == other.rows && cols == other.cols;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
    }
};

/// Throws std::invalid_argument naming both shapes if they differ.
void check_same_shape(const Matrix& a, const Matrix& b, const char* op);

/// Standard matrix product. Requires a.cols == b.rows.
Matrix matmul(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);

Matrix identity(std::size_t n);

bool all_finite(const Matrix& a);

/// Elementwise application; shape preserved.
template <typename F>
Matrix map(const Matrix& a, F f) {
    Matrix out(a.rows, a.cols);
    for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] = f(a.data[i]);
    return out;
}

/// Elementwise combination of two same-shape matrices.
template <typename F>
Matrix zip(const Matrix& a, const Matrix& b, F f) {
    check_same_shape(a, b, "zip");
    Matrix out(a.rows, a.cols);
    for (std::size_t i = 0; i < a.data.size(); ++i)
        out.data[i] = f(a.data[i], b.data[i]);
    return out;
}

}  // namespace mhae
