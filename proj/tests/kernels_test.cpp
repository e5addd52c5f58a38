#include "qts/kernels.hpp"

#include "doctest.h"
#include "support.hpp"

#include <random>
#include <vector>

using namespace qts;

namespace {

std::vector<Quaternion> random_quats(testing::Rng& rng, std::size_t n) {
    std::normal_distribution<double> d;
    std::vector<Quaternion> v(n);
    for (auto& q : v) q = Quaternion(d(rng), d(rng), d(rng), d(rng));
    return v;
}

} // namespace

TEST_CASE("scalar kernel matches the definition") {
    testing::Rng rng(31);
    const std::size_t m = 3, k = 4, n = 5;
    const auto a = random_quats(rng, m * k), b = random_quats(rng, k * n);
    std::vector<Quaternion> c(m * n);
    kernels::qgemm_scalar(a.data(), b.data(), c.data(), m, k, n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Quaternion s;
            for (std::size_t l = 0; l < k; ++l) s += a[i * k + l] * b[l * n + j];
            CHECK(approx_equal(c[i * n + j], s, 1e-13));
        }
    }
}

TEST_CASE("AVX2 kernel matches the scalar kernel") {
    const kernels::QGemmFn avx = kernels::qgemm_avx2();
    if (!avx) {
        MESSAGE("AVX2/FMA not available on this machine; only the scalar kernel is exercised");
        return;
    }
    testing::Rng rng(32);
    std::uniform_int_distribution<std::size_t> dim(1, 17);
    for (int t = 0; t < 200; ++t) {
        const std::size_t m = dim(rng), k = dim(rng), n = dim(rng);
        const auto a = random_quats(rng, m * k), b = random_quats(rng, k * n);
        std::vector<Quaternion> c1(m * n), c2(m * n);
        kernels::qgemm_scalar(a.data(), b.data(), c1.data(), m, k, n);
        avx(a.data(), b.data(), c2.data(), m, k, n);
        for (std::size_t i = 0; i < c1.size(); ++i) {
            const double scale = 1.0 + abs(c1[i]);
            CHECK(abs(c1[i] - c2[i]) <= 1e-13 * scale * static_cast<double>(k));
        }
    }
}

TEST_CASE("dispatch reports the selected kernel") {
    const std::string_view name = kernels::qgemm_name();
    CHECK((name == "scalar" || name == "avx2"));
    CHECK(kernels::qgemm() != nullptr);
}
