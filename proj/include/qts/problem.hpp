#pragma once

#include "qts/qlinalg.hpp"
#include "qts/qtensor.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qts {

enum class SystemKind { pair11, eq31, coupled14, main15, sys16, eta17 };

std::string_view to_string(SystemKind kind);
SystemKind parse_system_kind(std::string_view name);

using TensorMap = std::map<std::string, QTensor>;
using FreeParams = TensorMap;
using IntermediateSet = TensorMap;

struct ProblemInstance {
    SystemKind kind = SystemKind::main15;
    TensorMap coefficients;
    std::optional<EtaAxis> eta;

    const QTensor& get(const std::string& name) const;
};

struct Condition {
    std::string name;
    double lhs_norm = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct SolveReport {
    std::vector<Condition> conditions;
    bool consistent = true;
};

struct GeneralSolution {
    TensorMap unknowns;
    FreeParams params_used;
    IntermediateSet intermediates;
};

struct SolveResult {
    SolveReport report;
    std::optional<GeneralSolution> solution;
};

// Supplies a value for a free parameter that the caller did not set.
using ParamGenerator = std::function<QTensor(const std::string& name, const Shape& left, const Shape& right)>;

struct SolveOptions {
    double tol = 1e-8;
    PinvOptions pinv;
    // Unset: missing free parameters are zero tensors.
    ParamGenerator generator;
};

// 1e-8 unless QTSOLVE_TOL holds a positive number.
double default_tolerance();

} // namespace qts
