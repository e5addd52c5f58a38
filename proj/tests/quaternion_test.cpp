#include "qts/quaternion.hpp"

#include "doctest.h"
#include "support.hpp"

#include <limits>
#include <random>

using namespace qts;

namespace {

const Quaternion I{0, 1, 0, 0}, J{0, 0, 1, 0}, K{0, 0, 0, 1};

Quaternion random_quat(testing::Rng& rng) {
    std::normal_distribution<double> n;
    return {n(rng), n(rng), n(rng), n(rng)};
}

} // namespace

TEST_CASE("Hamilton product of the units") {
    CHECK(I * J == K);
    CHECK(J * K == I);
    CHECK(K * I == J);
    CHECK(J * I == -K);
    CHECK(I * I == Quaternion(-1));
    CHECK(J * J == Quaternion(-1));
    CHECK(K * K == Quaternion(-1));
    CHECK(I * J * K == Quaternion(-1));
}

TEST_CASE("Hamilton product examples") {
    const Quaternion q{1.5, -2, 3, 0.25};
    CHECK(Quaternion(1) * q == q);
    CHECK(q * Quaternion(1) == q);
    CHECK(Quaternion(1, 2, 0, 0) * Quaternion(3, 0, 4, 0) == Quaternion(3, 6, 4, 8));
}

TEST_CASE("multiplication is associative and not commutative") {
    testing::Rng rng(11);
    for (int t = 0; t < 100; ++t) {
        const Quaternion a = random_quat(rng), b = random_quat(rng), c = random_quat(rng);
        CHECK(approx_equal((a * b) * c, a * (b * c), 1e-12));
    }
    CHECK_FALSE(I * J == J * I);
}

TEST_CASE("conjugate") {
    CHECK(quat_conj(I) == -I);
    CHECK(quat_conj(Quaternion(5)) == Quaternion(5));
    CHECK(quat_conj(Quaternion(1, 2, 3, 4)) == Quaternion(1, -2, -3, -4));

    testing::Rng rng(12);
    for (int t = 0; t < 100; ++t) {
        const Quaternion a = random_quat(rng), b = random_quat(rng);
        CHECK(approx_equal(quat_conj(a * b), quat_conj(b) * quat_conj(a), 1e-12));
        const Quaternion n = a * quat_conj(a);
        const double eps = std::numeric_limits<double>::epsilon();
        CHECK(std::abs(n.w - norm2(a)) <= 8 * eps * norm2(a));
        CHECK(std::abs(n.x) + std::abs(n.y) + std::abs(n.z) <= 8 * eps * norm2(a));
        const Quaternion m = quat_conj(a) * a;
        CHECK(m.w >= 0.0);
    }
}

TEST_CASE("eta conjugate equals -eta conj(q) eta") {
    CHECK(quat_eta_conj(Quaternion(1, 2, 3, 4), EtaAxis::i) == Quaternion(1, -2, 3, 4));
    for (EtaAxis eta : {EtaAxis::i, EtaAxis::j, EtaAxis::k}) {
        CHECK(quat_eta_conj(Quaternion(2.5), eta) == Quaternion(2.5));
        const Quaternion e = eta_unit(eta);
        CHECK(e * e == Quaternion(-1));
        testing::Rng rng(13);
        for (int t = 0; t < 100; ++t) {
            const Quaternion a = random_quat(rng), b = random_quat(rng);
            CHECK(quat_eta_conj(quat_eta_conj(a, eta), eta) == a);
            CHECK(approx_equal(quat_eta_conj(a, eta), -e * quat_conj(a) * e, 1e-15));
            CHECK(approx_equal(quat_eta_conj(a * b, eta), quat_eta_conj(b, eta) * quat_eta_conj(a, eta), 1e-12));
        }
    }
}

TEST_CASE("axis names") {
    for (EtaAxis eta : {EtaAxis::i, EtaAxis::j, EtaAxis::k}) CHECK(parse_axis(axis_name(eta)) == eta);
    CHECK_THROWS(parse_axis('x'));
}
