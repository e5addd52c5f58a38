#include "qts/qlinalg.hpp"

#include "doctest.h"
#include "support.hpp"

#include <random>

using namespace qts;
using testing::random_low_rank;
using testing::random_shape;
using testing::random_tensor;
constexpr auto rel = testing::rel_diff;

namespace {

// Full rank or rank deficient, with equal probability.
QTensor random_operand(testing::Rng& rng) {
    const Shape l = random_shape(rng), r = random_shape(rng);
    if (std::bernoulli_distribution(0.5)(rng)) return random_tensor(rng, l, r);
    const std::size_t full = std::min(l.count(), r.count());
    const std::size_t rank = std::uniform_int_distribution<std::size_t>(1, full)(rng);
    return random_low_rank(rng, l, r, rank);
}

constexpr EtaAxis kAxes[] = {EtaAxis::i, EtaAxis::j, EtaAxis::k};

} // namespace

TEST_CASE("unfold and fold") {
    testing::Rng rng(41);
    const Shape s{2, 2};
    const QMatrix id = unfold(identity(s));
    CHECK(id.rows == 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) CHECK(id(r, c) == Quaternion(r == c ? 1.0 : 0.0));

    const QTensor a = random_tensor(rng, Shape{2, 3}, Shape{3}), b = random_tensor(rng, Shape{3}, s);
    CHECK(fold(unfold(a), a.left(), a.right()) == a);
    const QMatrix ab = matmul(unfold(a), unfold(b));
    CHECK(rel(fold(ab, a.left(), b.right()), a * b) <= 1e-14);
}

TEST_CASE("complex adjoint") {
    QMatrix j(1, 1);
    j(0, 0) = Quaternion(0, 0, 1, 0);
    const Eigen::MatrixXcd cj = complex_adjoint(j);
    CHECK(cj.rows() == 2);
    CHECK(std::abs(cj(0, 0)) == 0.0);
    CHECK(cj(0, 1) == std::complex<double>(1, 0));
    CHECK(cj(1, 0) == std::complex<double>(-1, 0));
    CHECK(std::abs(cj(1, 1)) == 0.0);

    CHECK(complex_adjoint(unfold(identity(Shape{3}))).isIdentity());

    testing::Rng rng(42);
    for (int t = 0; t < 20; ++t) {
        const QMatrix m = unfold(random_tensor(rng, Shape{3}, Shape{3}));
        const QMatrix n = unfold(random_tensor(rng, Shape{3}, Shape{3}));
        CHECK((complex_adjoint(matmul(m, n)) - complex_adjoint(m) * complex_adjoint(n)).norm() <= 1e-12);
        const QMatrix mh = unfold(conj_transpose(fold(m, Shape{3}, Shape{3})));
        CHECK((complex_adjoint(mh) - complex_adjoint(m).adjoint()).norm() <= 1e-14);
        CHECK(from_complex_adjoint(complex_adjoint(m), 3, 3) == m);
    }
}

TEST_CASE("pseudoinverse examples") {
    const Shape s{2, 2};
    const QTensor z = zero(s, Shape{3});
    const QTensor zp = pinv(z);
    CHECK(zp.left() == Shape{3});
    CHECK(zp == zero(Shape{3}, s));
    CHECK(rel(pinv(identity(s)), identity(s)) <= 1e-15);
    CHECK(rel(proj_left(identity(s)), zero(s, s)) <= 1e-15);
    CHECK(proj_left(zero(s, s)) == identity(s));
    CHECK(proj_right(zero(s, s)) == identity(s));
}

TEST_CASE("Penrose conditions on random tensors") {
    testing::Rng rng(43);
    for (int t = 0; t < 100; ++t) {
        const QTensor d = random_operand(rng);
        const QTensor p = pinv(d);
        CHECK(p.left() == d.right());
        CHECK(p.right() == d.left());
        for (double e : testing::penrose_errors(d, p)) CHECK(e <= 1e-10);
        CHECK(rel(pinv(p), d) <= 1e-10);
    }
}

TEST_CASE("projector identities") {
    testing::Rng rng(44);
    for (int t = 0; t < 50; ++t) {
        const QTensor d = random_operand(rng);
        const QTensor dp = pinv(d), l = proj_left(d), r = proj_right(d);
        CHECK(frob_norm(d * l) <= 1e-10 * (1 + frob_norm(d)));
        CHECK(frob_norm(r * d) <= 1e-10 * (1 + frob_norm(d)));
        CHECK(frob_norm(l * dp) <= 1e-10 * (1 + frob_norm(dp)));
        CHECK(frob_norm(dp * r) <= 1e-10 * (1 + frob_norm(dp)));
        CHECK(rel(l * l, l) <= 1e-11);
        CHECK(rel(r * r, r) <= 1e-11);
        CHECK(rel(conj_transpose(l), l) <= 1e-12);
        CHECK(rel(conj_transpose(r), r) <= 1e-12);
    }
}

TEST_CASE("pseudoinverse commutes with the involutions") {
    testing::Rng rng(45);
    for (int t = 0; t < 30; ++t) {
        const QTensor d = random_operand(rng);
        const QTensor dp = pinv(d);
        CHECK(rel(pinv(conj_transpose(d)), conj_transpose(dp)) <= 1e-10);
        CHECK(rel(pinv(conj_transpose(d) * d), dp * conj_transpose(dp)) <= 1e-9);
        for (EtaAxis eta : kAxes) {
            const QTensor de = eta_conj_transpose(d, eta);
            CHECK(rel(pinv(de), eta_conj_transpose(dp, eta)) <= 1e-10);
            CHECK(rel(eta_conj_transpose(proj_left(d), eta), proj_right(de)) <= 1e-10);
            CHECK(rel(eta_conj_transpose(proj_right(d), eta), proj_left(de)) <= 1e-10);
        }
    }
}

TEST_CASE("rank tolerance options") {
    testing::Rng rng(46);
    const Shape s{2, 2};
    // Rank two plus a direction at 1e-7 relative: kept by default, dropped by a coarse cut.
    const QTensor d = random_low_rank(rng, s, s, 2) + 1e-7 * random_low_rank(rng, s, s, 1);
    PinvOptions coarse;
    coarse.rank_tol_factor = 1e-4;
    const QTensor fine_p = pinv(d), coarse_p = pinv(d, coarse);
    CHECK(frob_norm(fine_p) > 1e5);
    CHECK(frob_norm(coarse_p) < 1e3);
    for (double e : testing::penrose_errors(d, fine_p)) CHECK(e <= 1e-6);
}
