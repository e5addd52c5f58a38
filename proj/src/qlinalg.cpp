#include "qts/qlinalg.hpp"

#include "qts/errors.hpp"
#include "qts/kernels.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <complex>

namespace qts {

QMatrix unfold(const QTensor& a) {
    QMatrix m(a.rows(), a.cols());
    std::copy(a.data().begin(), a.data().end(), m.data.begin());
    return m;
}

QTensor fold(const QMatrix& m, const Shape& left, const Shape& right) {
    if (left.count() != m.rows || right.count() != m.cols) {
        throw ShapeMismatch("fold: " + std::to_string(m.rows) + "x" + std::to_string(m.cols) +
                            " matrix does not fit " + left.str() + "x" + right.str());
    }
    return QTensor(left, right, m.data);
}

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
    if (a.cols != b.rows) throw ShapeMismatch("matmul: inner dimensions differ");
    QMatrix c(a.rows, b.cols);
    kernels::qgemm()(a.data.data(), b.data.data(), c.data.data(), a.rows, a.cols, b.cols);
    return c;
}

Eigen::MatrixXcd complex_adjoint(const QMatrix& m) {
    const auto r = static_cast<Eigen::Index>(m.rows);
    const auto c = static_cast<Eigen::Index>(m.cols);
    Eigen::MatrixXcd chi(2 * r, 2 * c);
    for (Eigen::Index i = 0; i < r; ++i) {
        for (Eigen::Index j = 0; j < c; ++j) {
            const Quaternion& q = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            const std::complex<double> ma(q.w, q.x), mb(q.y, q.z);
            chi(i, j) = ma;
            chi(i, j + c) = mb;
            chi(i + r, j) = -std::conj(mb);
            chi(i + r, j + c) = std::conj(ma);
        }
    }
    return chi;
}

QMatrix from_complex_adjoint(const Eigen::MatrixXcd& chi, std::size_t rows, std::size_t cols) {
    const auto r = static_cast<Eigen::Index>(rows);
    const auto c = static_cast<Eigen::Index>(cols);
    if (chi.rows() != 2 * r || chi.cols() != 2 * c) throw ShapeMismatch("complex adjoint has wrong size");
    QMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < r; ++i) {
        for (Eigen::Index j = 0; j < c; ++j) {
            const std::complex<double> ma = 0.5 * (chi(i, j) + std::conj(chi(i + r, j + c)));
            const std::complex<double> mb = 0.5 * (chi(i, j + c) - std::conj(chi(i + r, j)));
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = {ma.real(), ma.imag(), mb.real(), mb.imag()};
        }
    }
    return m;
}

QMatrix pinv(const QMatrix& m, const PinvOptions& opts) {
    QMatrix result(m.cols, m.rows);
    if (m.rows == 0 || m.cols == 0) return result;
    const Eigen::MatrixXcd chi = complex_adjoint(m);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(chi, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) return result;
    const double cut = std::max(opts.rank_tol_factor * static_cast<double>(std::max(m.rows, m.cols)) * s(0),
                                opts.abs_tol);
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > cut) inv(i) = 1.0 / s(i);
    const Eigen::MatrixXcd p = svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
    return from_complex_adjoint(p, m.cols, m.rows);
}

QTensor pinv(const QTensor& a, const PinvOptions& opts) {
    return fold(pinv(unfold(a), opts), a.right(), a.left());
}

QTensor proj_left(const QTensor& a, const PinvOptions& opts) {
    return identity(a.right()) - pinv(a, opts) * a;
}

QTensor proj_right(const QTensor& a, const PinvOptions& opts) {
    return identity(a.left()) - a * pinv(a, opts);
}

} // namespace qts
