#pragma once

#include "qts/problem.hpp"
#include "qts/verify.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>

namespace qts::io {

using Json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

// {"left_shape": [...], "right_shape": [...], "entries": [[w, x, y, z], ...]}
Json tensor_to_json(const QTensor& t);
// `name` is only used in error messages. Throws InputError.
QTensor tensor_from_json(const Json& j, const std::string& name);

Json problem_to_json(const ProblemInstance& inst);
ProblemInstance problem_from_json(const Json& j);

struct SolutionFile {
    SystemKind kind = SystemKind::main15;
    TensorMap unknowns;
    FreeParams params_used;
};

Json solution_to_json(const SolutionFile& sol);
SolutionFile solution_from_json(const Json& j);

// Reads a map of named tensors, as used for --params files.
TensorMap tensors_from_json(const Json& j);
Json tensors_to_json(const TensorMap& tensors);

Json report_to_json(const SolveReport& report);
Json residual_to_json(const ResidualReport& report);

// Throws InputError on unreadable files or invalid JSON.
Json read_json(const std::filesystem::path& path);
// Two-space indentation and a trailing newline; identical input gives
// byte-identical output.
void write_json(const std::filesystem::path& path, const Json& j);
std::string dump(const Json& j);

} // namespace qts::io
