#pragma once

#include "qts/quaternion.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qts {

class Shape {
public:
    Shape() = default;
    Shape(std::initializer_list<std::size_t> dims);
    explicit Shape(std::vector<std::size_t> dims);

    std::size_t rank() const { return dims_.size(); }
    std::size_t count() const;
    std::size_t operator[](std::size_t i) const { return dims_[i]; }
    const std::vector<std::size_t>& dims() const { return dims_; }

    friend bool operator==(const Shape&, const Shape&) = default;

    std::string str() const;

private:
    std::vector<std::size_t> dims_;
};

// Dense quaternion tensor in H^{left x right}. Entries are stored row-major
// over the concatenated (left, right) index list, so the flat layout is also
// the row-major layout of the unfolded prod(left) x prod(right) matrix.
class QTensor {
public:
    QTensor() = default;
    QTensor(Shape left, Shape right);
    QTensor(Shape left, Shape right, std::vector<Quaternion> data);

    const Shape& left() const { return left_; }
    const Shape& right() const { return right_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    // Unfolded (row, col) access.
    Quaternion& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Quaternion& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    // Full multi-index access, left indices first.
    Quaternion& at(std::span<const std::size_t> index);
    const Quaternion& at(std::span<const std::size_t> index) const;

    std::span<Quaternion> data() { return data_; }
    std::span<const Quaternion> data() const { return data_; }

    friend bool operator==(const QTensor&, const QTensor&) = default;

private:
    std::size_t flat_index(std::span<const std::size_t> index) const;

    Shape left_;
    Shape right_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Quaternion> data_;
};

QTensor zero(const Shape& left, const Shape& right);
QTensor identity(const Shape& shape);

// Contracts a.right against b.left.
QTensor einstein_product(const QTensor& a, const QTensor& b);
// Same, with the contraction order stated explicitly; n must equal the
// number of indices in a.right and in b.left.
QTensor einstein_product(const QTensor& a, const QTensor& b, std::size_t n);

QTensor conj_transpose(const QTensor& a);
QTensor eta_conj_transpose(const QTensor& a, EtaAxis eta);

// (a b): a.left == b.left, right dims add per mode; off-block entries are zero.
QTensor row_block(const QTensor& a, const QTensor& b);
// (c; d): c.right == d.right, left dims add per mode.
QTensor col_block(const QTensor& c, const QTensor& d);

QTensor add(const QTensor& a, const QTensor& b);
QTensor sub(const QTensor& a, const QTensor& b);
QTensor scale(const QTensor& a, double s);
QTensor scale(const QTensor& a, const Quaternion& left_factor, const Quaternion& right_factor);

double frob_norm(const QTensor& a);
bool approx_eq(const QTensor& a, const QTensor& b, double tol);

inline QTensor operator+(const QTensor& a, const QTensor& b) { return add(a, b); }
inline QTensor operator-(const QTensor& a, const QTensor& b) { return sub(a, b); }
inline QTensor operator-(const QTensor& a) { return scale(a, -1.0); }
inline QTensor operator*(const QTensor& a, const QTensor& b) { return einstein_product(a, b); }
inline QTensor operator*(double s, const QTensor& a) { return scale(a, s); }

} // namespace qts
