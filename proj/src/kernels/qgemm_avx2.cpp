#include "qts/kernels.hpp"

#include <algorithm>

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define QTS_HAVE_AVX2_KERNEL 1
#include <immintrin.h>
#endif

namespace qts::kernels {

#ifdef QTS_HAVE_AVX2_KERNEL

static_assert(sizeof(Quaternion) == 4 * sizeof(double));

namespace {

// One quaternion is one __m256d (w, x, y, z). The product a*b is
//   a.w*(w, x, y, z) + a.x*(-x, w, -z, y) + a.y*(-y, z, w, -x) + a.z*(-z, -y, x, w)
// so each a-component scales a fixed lane permutation of b with fixed signs.
__attribute__((target("avx2,fma")))
void qgemm_avx2_impl(const Quaternion* a, const Quaternion* b, Quaternion* c,
                     std::size_t m, std::size_t k, std::size_t n) {
    std::fill(c, c + m * n, Quaternion{});
    const __m256d sign_x = _mm256_setr_pd(-1.0, 1.0, -1.0, 1.0);
    const __m256d sign_y = _mm256_setr_pd(-1.0, 1.0, 1.0, -1.0);
    const __m256d sign_z = _mm256_setr_pd(-1.0, -1.0, 1.0, 1.0);
    for (std::size_t i = 0; i < m; ++i) {
        double* crow = reinterpret_cast<double*>(c + i * n);
        for (std::size_t p = 0; p < k; ++p) {
            const Quaternion& q = a[i * k + p];
            const __m256d aw = _mm256_set1_pd(q.w);
            const __m256d ax = _mm256_mul_pd(_mm256_set1_pd(q.x), sign_x);
            const __m256d ay = _mm256_mul_pd(_mm256_set1_pd(q.y), sign_y);
            const __m256d az = _mm256_mul_pd(_mm256_set1_pd(q.z), sign_z);
            const double* brow = reinterpret_cast<const double*>(b + p * n);
            for (std::size_t j = 0; j < n; ++j) {
                const __m256d bv = _mm256_loadu_pd(brow + 4 * j);
                __m256d acc = _mm256_loadu_pd(crow + 4 * j);
                acc = _mm256_fmadd_pd(aw, bv, acc);
                acc = _mm256_fmadd_pd(ax, _mm256_permute4x64_pd(bv, 0xB1), acc);
                acc = _mm256_fmadd_pd(ay, _mm256_permute4x64_pd(bv, 0x4E), acc);
                acc = _mm256_fmadd_pd(az, _mm256_permute4x64_pd(bv, 0x1B), acc);
                _mm256_storeu_pd(crow + 4 * j, acc);
            }
        }
    }
}

} // namespace

QGemmFn qgemm_avx2() {
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &qgemm_avx2_impl;
    return nullptr;
}

#else

QGemmFn qgemm_avx2() { return nullptr; }

#endif

} // namespace qts::kernels
