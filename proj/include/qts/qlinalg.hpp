#pragma once

#include "qts/qtensor.hpp"

#include <Eigen/Core>

#include <vector>

namespace qts {

struct QMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Quaternion> data; // row-major

    QMatrix() = default;
    QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    Quaternion& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const Quaternion& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    friend bool operator==(const QMatrix&, const QMatrix&) = default;
};

QMatrix unfold(const QTensor& a);
QTensor fold(const QMatrix& m, const Shape& left, const Shape& right);

QMatrix matmul(const QMatrix& a, const QMatrix& b);

// chi(Ma + Mb j) = [[Ma, Mb], [-conj(Mb), conj(Ma)]]
Eigen::MatrixXcd complex_adjoint(const QMatrix& m);
// Inverse of complex_adjoint; the two redundant copies of each block are averaged.
QMatrix from_complex_adjoint(const Eigen::MatrixXcd& c, std::size_t rows, std::size_t cols);

struct PinvOptions {
    // Singular values below rank_tol_factor * max(rows, cols) * sigma_max are dropped.
    double rank_tol_factor = 1e-12;
    // Singular values below this are dropped as well. Nested projector products
    // that are zero in exact arithmetic come out as 1e-16 noise otherwise.
    double abs_tol = 1e-10;
};

QMatrix pinv(const QMatrix& m, const PinvOptions& opts = {});
QTensor pinv(const QTensor& a, const PinvOptions& opts = {});

// L_A = I - A^+ A and R_A = I - A A^+.
QTensor proj_left(const QTensor& a, const PinvOptions& opts = {});
QTensor proj_right(const QTensor& a, const PinvOptions& opts = {});

} // namespace qts
