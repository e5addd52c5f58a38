#include "qts/qtensor.hpp"

#include "qts/errors.hpp"
#include "qts/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

namespace qts {

Shape::Shape(std::initializer_list<std::size_t> dims) : Shape(std::vector<std::size_t>(dims)) {}

Shape::Shape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    std::size_t total = 1;
    for (std::size_t d : dims_) {
        if (d == 0) throw ShapeMismatch("shape " + str() + " has a zero dimension");
        if (total > std::numeric_limits<std::size_t>::max() / d)
            throw ShapeMismatch("shape " + str() + " overflows the index type");
        total *= d;
    }
}

std::size_t Shape::count() const {
    return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
}

std::string Shape::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < dims_.size(); ++i) os << (i ? "," : "") << dims_[i];
    os << ')';
    return os.str();
}

QTensor::QTensor(Shape left, Shape right)
    : left_(std::move(left)), right_(std::move(right)), rows_(left_.count()), cols_(right_.count()),
      data_(rows_ * cols_) {}

QTensor::QTensor(Shape left, Shape right, std::vector<Quaternion> data)
    : left_(std::move(left)), right_(std::move(right)), rows_(left_.count()), cols_(right_.count()),
      data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw ShapeMismatch("tensor " + left_.str() + "x" + right_.str() + " needs " +
                            std::to_string(rows_ * cols_) + " entries, got " +
                            std::to_string(data_.size()));
    }
}

std::size_t QTensor::flat_index(std::span<const std::size_t> index) const {
    const std::size_t n = left_.rank(), m = right_.rank();
    if (index.size() != n + m) throw ShapeMismatch("index has wrong number of components");
    std::size_t flat = 0;
    for (std::size_t s = 0; s < n + m; ++s) {
        const std::size_t dim = s < n ? left_[s] : right_[s - n];
        if (index[s] >= dim) throw ShapeMismatch("index out of range");
        flat = flat * dim + index[s];
    }
    return flat;
}

Quaternion& QTensor::at(std::span<const std::size_t> index) { return data_[flat_index(index)]; }
const Quaternion& QTensor::at(std::span<const std::size_t> index) const { return data_[flat_index(index)]; }

QTensor zero(const Shape& left, const Shape& right) { return QTensor(left, right); }

QTensor identity(const Shape& shape) {
    QTensor t(shape, shape);
    for (std::size_t r = 0; r < t.rows(); ++r) t(r, r) = Quaternion{1.0};
    return t;
}

QTensor einstein_product(const QTensor& a, const QTensor& b) {
    if (a.right() != b.left()) {
        throw ShapeMismatch("Einstein product: contracted shapes " + a.right().str() + " and " +
                            b.left().str() + " differ");
    }
    QTensor c(a.left(), b.right());
    kernels::qgemm()(a.data().data(), b.data().data(), c.data().data(), a.rows(), a.cols(), b.cols());
    return c;
}

QTensor einstein_product(const QTensor& a, const QTensor& b, std::size_t n) {
    if (a.right().rank() != n || b.left().rank() != n) {
        throw ShapeMismatch("Einstein product of order " + std::to_string(n) + " on shapes " +
                            a.right().str() + " and " + b.left().str());
    }
    return einstein_product(a, b);
}

QTensor conj_transpose(const QTensor& a) {
    QTensor t(a.right(), a.left());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = quat_conj(a(r, c));
    return t;
}

QTensor eta_conj_transpose(const QTensor& a, EtaAxis eta) {
    QTensor t(a.right(), a.left());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = quat_eta_conj(a(r, c), eta);
    return t;
}

namespace {

Shape sum_shape(const Shape& a, const Shape& b, const char* what) {
    if (a.rank() != b.rank()) {
        throw ShapeMismatch(std::string(what) + ": block shapes " + a.str() + " and " + b.str() +
                            " have different orders");
    }
    std::vector<std::size_t> dims(a.rank());
    for (std::size_t s = 0; s < a.rank(); ++s) dims[s] = a[s] + b[s];
    return Shape(std::move(dims));
}

// Visits every multi-index of `shape` together with its flat position.
template <typename F>
void for_each_index(const Shape& shape, F&& f) {
    std::vector<std::size_t> idx(shape.rank(), 0);
    const std::size_t total = shape.count();
    for (std::size_t flat = 0; flat < total; ++flat) {
        f(flat, idx);
        for (std::size_t s = shape.rank(); s-- > 0;) {
            if (++idx[s] < shape[s]) break;
            idx[s] = 0;
        }
    }
}

std::size_t flatten(const Shape& shape, const std::vector<std::size_t>& idx, const Shape& offset,
                    bool shifted) {
    std::size_t flat = 0;
    for (std::size_t s = 0; s < shape.rank(); ++s) flat = flat * shape[s] + (idx[s] - (shifted ? offset[s] : 0));
    return flat;
}

// For each position of the summed shape: which block it falls in, if any.
// 0 = first block, 1 = second block, -1 = mixed position (always zero).
std::vector<std::pair<int, std::size_t>> block_map(const Shape& first, const Shape& second,
                                                   const Shape& total) {
    std::vector<std::pair<int, std::size_t>> map(total.count(), {-1, 0});
    for_each_index(total, [&](std::size_t flat, const std::vector<std::size_t>& idx) {
        bool all_low = true, all_high = true;
        for (std::size_t s = 0; s < total.rank(); ++s) {
            if (idx[s] < first[s]) all_high = false;
            else all_low = false;
        }
        if (all_low) map[flat] = {0, flatten(first, idx, first, false)};
        else if (all_high) map[flat] = {1, flatten(second, idx, first, true)};
    });
    return map;
}

} // namespace

QTensor row_block(const QTensor& a, const QTensor& b) {
    if (a.left() != b.left()) {
        throw ShapeMismatch("row_block: left shapes " + a.left().str() + " and " + b.left().str() + " differ");
    }
    const Shape right = sum_shape(a.right(), b.right(), "row_block");
    const auto map = block_map(a.right(), b.right(), right);
    QTensor t(a.left(), right);
    for (std::size_t r = 0; r < t.rows(); ++r) {
        for (std::size_t c = 0; c < t.cols(); ++c) {
            const auto [which, src] = map[c];
            if (which == 0) t(r, c) = a(r, src);
            else if (which == 1) t(r, c) = b(r, src);
        }
    }
    return t;
}

QTensor col_block(const QTensor& c, const QTensor& d) {
    if (c.right() != d.right()) {
        throw ShapeMismatch("col_block: right shapes " + c.right().str() + " and " + d.right().str() + " differ");
    }
    const Shape left = sum_shape(c.left(), d.left(), "col_block");
    const auto map = block_map(c.left(), d.left(), left);
    QTensor t(left, c.right());
    for (std::size_t r = 0; r < t.rows(); ++r) {
        const auto [which, src] = map[r];
        if (which < 0) continue;
        const QTensor& from = which == 0 ? c : d;
        for (std::size_t col = 0; col < t.cols(); ++col) t(r, col) = from(src, col);
    }
    return t;
}

namespace {

void require_same_shape(const QTensor& a, const QTensor& b, const char* op) {
    if (a.left() != b.left() || a.right() != b.right()) {
        throw ShapeMismatch(std::string(op) + ": shapes " + a.left().str() + "x" + a.right().str() + " and " +
                            b.left().str() + "x" + b.right().str() + " differ");
    }
}

} // namespace

QTensor add(const QTensor& a, const QTensor& b) {
    require_same_shape(a, b, "add");
    QTensor t = a;
    auto out = t.data();
    auto in = b.data();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += in[i];
    return t;
}

QTensor sub(const QTensor& a, const QTensor& b) {
    require_same_shape(a, b, "sub");
    QTensor t = a;
    auto out = t.data();
    auto in = b.data();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= in[i];
    return t;
}

QTensor scale(const QTensor& a, double s) {
    QTensor t = a;
    for (Quaternion& q : t.data()) q = s * q;
    return t;
}

QTensor scale(const QTensor& a, const Quaternion& left_factor, const Quaternion& right_factor) {
    QTensor t = a;
    for (Quaternion& q : t.data()) q = left_factor * q * right_factor;
    return t;
}

double frob_norm(const QTensor& a) {
    double s = 0.0;
    for (const Quaternion& q : a.data()) s += norm2(q);
    return std::sqrt(s);
}

bool approx_eq(const QTensor& a, const QTensor& b, double tol) {
    require_same_shape(a, b, "approx_eq");
    return frob_norm(sub(a, b)) <= tol * (1.0 + std::max(frob_norm(a), frob_norm(b)));
}

} // namespace qts
