#include "qts/kernels.hpp"

#include <cstdlib>
#include <string>

namespace qts::kernels {

namespace {

struct Selection {
    QGemmFn fn;
    std::string_view name;
};

Selection select() {
    const char* force = std::getenv("QTS_FORCE_SCALAR");
    if (force == nullptr || std::string(force) != "1") {
        if (QGemmFn fn = qgemm_avx2()) return {fn, "avx2"};
    }
    return {&qgemm_scalar, "scalar"};
}

const Selection& selection() {
    static const Selection s = select();
    return s;
}

} // namespace

QGemmFn qgemm() { return selection().fn; }
std::string_view qgemm_name() { return selection().name; }

} // namespace qts::kernels
