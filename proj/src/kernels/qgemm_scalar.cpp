#include "qts/kernels.hpp"

#include <algorithm>

namespace qts::kernels {

void qgemm_scalar(const Quaternion* a, const Quaternion* b, Quaternion* c,
                  std::size_t m, std::size_t k, std::size_t n) {
    std::fill(c, c + m * n, Quaternion{});
    for (std::size_t i = 0; i < m; ++i) {
        Quaternion* crow = c + i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const Quaternion aip = a[i * k + p];
            const Quaternion* brow = b + p * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += quat_mul(aip, brow[j]);
        }
    }
}

} // namespace qts::kernels
