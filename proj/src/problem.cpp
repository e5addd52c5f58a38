#include "qts/problem.hpp"

#include "qts/errors.hpp"

#include <cstdlib>
#include <string>

namespace qts {

std::string_view to_string(SystemKind kind) {
    switch (kind) {
    case SystemKind::pair11: return "pair11";
    case SystemKind::eq31: return "eq31";
    case SystemKind::coupled14: return "coupled14";
    case SystemKind::main15: return "main15";
    case SystemKind::sys16: return "sys16";
    case SystemKind::eta17: return "eta17";
    }
    return "?";
}

SystemKind parse_system_kind(std::string_view name) {
    for (SystemKind k : {SystemKind::pair11, SystemKind::eq31, SystemKind::coupled14, SystemKind::main15,
                         SystemKind::sys16, SystemKind::eta17}) {
        if (to_string(k) == name) return k;
    }
    throw InputError("unknown system kind '" + std::string(name) + "'");
}

const QTensor& ProblemInstance::get(const std::string& name) const {
    auto it = coefficients.find(name);
    if (it == coefficients.end()) throw InputError("missing tensor '" + name + "'");
    return it->second;
}

double default_tolerance() {
    if (const char* env = std::getenv("QTSOLVE_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0.0) return v;
    }
    return 1e-8;
}

} // namespace qts
