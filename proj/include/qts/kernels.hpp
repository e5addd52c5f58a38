#pragma once

#include "qts/quaternion.hpp"

#include <cstddef>
#include <string_view>

namespace qts::kernels {

// c[m x n] = a[m x k] * b[k x n], all row-major.
using QGemmFn = void (*)(const Quaternion* a, const Quaternion* b, Quaternion* c,
                         std::size_t m, std::size_t k, std::size_t n);

void qgemm_scalar(const Quaternion* a, const Quaternion* b, Quaternion* c,
                  std::size_t m, std::size_t k, std::size_t n);

// Null when the build or the CPU lacks AVX2/FMA.
QGemmFn qgemm_avx2();

// Picked once per process from the CPU feature bits; QTS_FORCE_SCALAR=1 in
// the environment pins the scalar kernel.
QGemmFn qgemm();
std::string_view qgemm_name();

} // namespace qts::kernels
