#include "qts/qtensor.hpp"

#include "doctest.h"
#include "qts/errors.hpp"
#include "support.hpp"

#include <functional>
#include <random>

using namespace qts;
using testing::random_shape;
using testing::random_tensor;
constexpr auto rel = testing::rel_diff;

namespace {

// Calls f on every multi-index of `s` in row-major order.
void for_each_index(const Shape& s, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(s.rank(), 0);
    for (std::size_t n = 0; n < s.count(); ++n) {
        f(idx);
        for (std::size_t m = s.rank(); m-- > 0;) {
            if (++idx[m] < s[m]) break;
            idx[m] = 0;
        }
    }
}

std::vector<std::size_t> concat(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

// c[i, k] = sum over j of a[i, j] b[j, k], by brute force over multi-indices.
QTensor naive_einstein(const QTensor& a, const QTensor& b) {
    QTensor c(a.left(), b.right());
    for_each_index(a.left(), [&](const auto& i) {
        for_each_index(b.right(), [&](const auto& k) {
            Quaternion sum;
            for_each_index(a.right(), [&](const auto& j) { sum += a.at(concat(i, j)) * b.at(concat(j, k)); });
            c.at(concat(i, k)) = sum;
        });
    });
    return c;
}

} // namespace

TEST_CASE("shape validation") {
    CHECK_THROWS_AS(Shape({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(QTensor(Shape{2}, Shape{2}, std::vector<Quaternion>(3)), ShapeMismatch);
    const Shape s{2, 3};
    CHECK(s.rank() == 2);
    CHECK(s.count() == 6);
    CHECK(s.str() == "(2,3)");
}

TEST_CASE("linearization is row-major with the last index fastest") {
    QTensor t(Shape{2, 3}, Shape{2});
    std::size_t n = 0;
    for (Quaternion& q : t.data()) q = Quaternion(static_cast<double>(n++));
    CHECK(t.at(std::vector<std::size_t>{1, 2, 1}).w == 11.0);
    CHECK(t.at(std::vector<std::size_t>{0, 1, 0}).w == 2.0);
    CHECK(t(4, 1).w == 9.0);
}

TEST_CASE("einstein product agrees with a nested-loop contraction") {
    testing::Rng rng(21);
    for (int t = 0; t < 60; ++t) {
        const Shape i = random_shape(rng), j = random_shape(rng), k = random_shape(rng);
        const QTensor a = random_tensor(rng, i, j), b = random_tensor(rng, j, k);
        const QTensor fast = einstein_product(a, b);
        CHECK(fast.left() == i);
        CHECK(fast.right() == k);
        CHECK(rel(fast, naive_einstein(a, b)) <= 1e-13);
        CHECK(rel(einstein_product(a, b, j.rank()), fast) == 0.0);
    }
}

TEST_CASE("einstein product examples and errors") {
    testing::Rng rng(22);
    const Shape s{2, 2};
    const QTensor b = random_tensor(rng, s, s);
    CHECK(identity(s) * b == b);
    CHECK(b * zero(s, Shape{3}) == zero(s, Shape{3}));
    CHECK_THROWS_AS(b * random_tensor(rng, Shape{4}, s), ShapeMismatch);
    CHECK_THROWS_AS(einstein_product(b, b, 1), ShapeMismatch);
}

TEST_CASE("associativity and reversal laws") {
    testing::Rng rng(23);
    for (int t = 0; t < 50; ++t) {
        const Shape i = random_shape(rng), j = random_shape(rng), k = random_shape(rng), l = random_shape(rng);
        const QTensor a = random_tensor(rng, i, j), b = random_tensor(rng, j, k), c = random_tensor(rng, k, l);
        CHECK(rel((a * b) * c, a * (b * c)) <= 1e-12);
        CHECK(rel(conj_transpose(a * b), conj_transpose(b) * conj_transpose(a)) <= 1e-13);
        for (EtaAxis eta : {EtaAxis::i, EtaAxis::j, EtaAxis::k}) {
            CHECK(rel(eta_conj_transpose(a * b, eta), eta_conj_transpose(b, eta) * eta_conj_transpose(a, eta)) <=
                  1e-13);
        }
    }
}

TEST_CASE("conjugate transposes") {
    testing::Rng rng(24);
    const QTensor a = random_tensor(rng, Shape{2, 3}, Shape{3});
    CHECK(conj_transpose(conj_transpose(a)) == a);
    CHECK(conj_transpose(identity(Shape{2, 2})) == identity(Shape{2, 2}));
    const QTensor ct = conj_transpose(a);
    CHECK(ct.left() == a.right());
    CHECK(ct(2, 4) == quat_conj(a(4, 2)));

    for (EtaAxis eta : {EtaAxis::i, EtaAxis::j, EtaAxis::k}) {
        CHECK(eta_conj_transpose(eta_conj_transpose(a, eta), eta) == a);
        // -eta a^* eta, entry by entry.
        const QTensor sandwich = scale(conj_transpose(a), -eta_unit(eta), eta_unit(eta));
        CHECK(approx_eq(eta_conj_transpose(a, eta), sandwich, 1e-15));

        QTensor sym(Shape{2, 2}, Shape{2, 2});
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c <= r; ++c) sym(r, c) = sym(c, r) = Quaternion(double(r * 4 + c));
        CHECK(eta_conj_transpose(sym, eta) == sym);
    }
}

TEST_CASE("block tensors follow the direct-sum index map") {
    testing::Rng rng(25);
    for (int t = 0; t < 30; ++t) {
        const Shape left = random_shape(rng);
        const std::size_t order = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
        std::vector<std::size_t> da(order), db(order);
        std::uniform_int_distribution<std::size_t> dim(1, 3);
        for (std::size_t m = 0; m < order; ++m) {
            da[m] = dim(rng);
            db[m] = dim(rng);
        }
        const QTensor a = random_tensor(rng, left, Shape(da)), b = random_tensor(rng, left, Shape(db));
        const QTensor r = row_block(a, b);
        for (std::size_t m = 0; m < order; ++m) CHECK(r.right()[m] == da[m] + db[m]);

        for_each_index(left, [&](const auto& i) {
            for_each_index(r.right(), [&](const auto& l) {
                bool in_a = true, in_b = true;
                std::vector<std::size_t> lb(order);
                for (std::size_t m = 0; m < order; ++m) {
                    in_a = in_a && l[m] < da[m];
                    in_b = in_b && l[m] >= da[m];
                    lb[m] = l[m] >= da[m] ? l[m] - da[m] : 0;
                }
                const Quaternion expected = in_a ? a.at(concat(i, l)) : in_b ? b.at(concat(i, lb)) : Quaternion();
                CHECK(r.at(concat(i, l)) == expected);
            });
        });

        const QTensor c = col_block(conj_transpose(a), conj_transpose(b));
        CHECK(c == conj_transpose(r));
    }
}

TEST_CASE("block examples and product laws") {
    testing::Rng rng(26);
    const Shape s{2, 2};
    const QTensor a = random_tensor(rng, s, s), b = random_tensor(rng, s, s);
    const QTensor r = row_block(a, b);
    CHECK(r.left() == s);
    CHECK(r.right() == Shape{4, 4});
    CHECK(r.size() == 64);

    const QTensor padded = row_block(a, zero(s, s));
    CHECK(frob_norm(padded) == doctest::Approx(frob_norm(a)));

    for (int t = 0; t < 50; ++t) {
        const Shape i = random_shape(rng), j = random_shape(rng, 2), k = random_shape(rng);
        const Shape j2(std::vector<std::size_t>(j.rank(), 2));
        const QTensor A = random_tensor(rng, i, j), B = random_tensor(rng, i, j2);
        const QTensor C = random_tensor(rng, j, k), D = random_tensor(rng, j2, k);
        CHECK(rel(row_block(A, B) * col_block(C, D), A * C + B * D) <= 1e-13);
        const QTensor G = random_tensor(rng, k, i);
        CHECK(rel(G * row_block(A, B), row_block(G * A, G * B)) <= 1e-13);
        const QTensor H = random_tensor(rng, k, i);
        CHECK(rel(col_block(C, D) * H, col_block(C * H, D * H)) <= 1e-13);
    }
    CHECK_THROWS_AS(row_block(a, random_tensor(rng, Shape{3}, s)), ShapeMismatch);
    CHECK_THROWS_AS(col_block(a, random_tensor(rng, s, Shape{4})), ShapeMismatch);
}

TEST_CASE("elementwise algebra") {
    testing::Rng rng(27);
    const Shape s{2, 2};
    const QTensor a = random_tensor(rng, s, s);
    CHECK(a + zero(s, s) == a);
    CHECK(a - a == zero(s, s));
    CHECK(frob_norm(identity(s)) == 2.0);
    CHECK(approx_eq(a, a, 0.0));
    CHECK_FALSE(approx_eq(a, 1.001 * a, 1e-6));
    CHECK(approx_eq(a, (1.0 + 1e-12) * a, 1e-10));
    CHECK_THROWS_AS(a + zero(s, Shape{4}), ShapeMismatch);
    const Quaternion qi{0, 1, 0, 0}, qj{0, 0, 1, 0};
    const QTensor sc = scale(a, qi, qj);
    CHECK(sc(1, 2) == qi * a(1, 2) * qj);
}
