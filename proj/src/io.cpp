#include "qts/io.hpp"

#include "qts/equations.hpp"
#include "qts/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace qts::io {

namespace {

Json shape_to_json(const Shape& s) {
    Json a = Json::array();
    for (std::size_t d : s.dims()) a.push_back(d);
    return a;
}

Shape shape_from_json(const Json& j, const std::string& name, const char* field) {
    if (!j.contains(field) || !j.at(field).is_array() || j.at(field).empty()) {
        throw InputError("tensor '" + name + "': '" + field + "' must be a non-empty array of positive integers");
    }
    std::vector<std::size_t> dims;
    for (const Json& d : j.at(field)) {
        if (!d.is_number_integer() || d.get<long long>() <= 0) {
            throw InputError("tensor '" + name + "': '" + field + "' must be a non-empty array of positive integers");
        }
        dims.push_back(d.get<std::size_t>());
    }
    return Shape(dims);
}

const Json& field(const Json& j, const char* key, const std::string& what) {
    if (!j.is_object() || !j.contains(key)) throw InputError(what + " has no '" + key + "' field");
    return j.at(key);
}

TensorMap named_tensors(const Json& j, const std::string& what) {
    if (!j.is_object()) throw InputError(what + " must be an object of named tensors");
    TensorMap out;
    for (const auto& [name, value] : j.items()) out.emplace(name, tensor_from_json(value, name));
    return out;
}

// Known names first in the given order, anything else afterwards by name.
Json ordered_tensors(const TensorMap& tensors, const std::vector<std::string>& order) {
    Json j = Json::object();
    for (const std::string& name : order) {
        if (auto it = tensors.find(name); it != tensors.end()) j[name] = tensor_to_json(it->second);
    }
    for (const auto& [name, t] : tensors) {
        if (!j.contains(name)) j[name] = tensor_to_json(t);
    }
    return j;
}

void check_version(const Json& j, const std::string& what) {
    const Json& v = field(j, "version", what);
    if (!v.is_number_integer() || v.get<int>() != kFormatVersion) {
        throw InputError(what + ": unsupported version " + v.dump() + ", expected " +
                         std::to_string(kFormatVersion));
    }
}

SystemKind kind_from_json(const Json& j, const std::string& what) {
    const Json& s = field(j, "system", what);
    if (!s.is_string()) throw InputError(what + ": 'system' must be a string");
    return parse_system_kind(s.get<std::string>());
}

} // namespace

Json tensor_to_json(const QTensor& t) {
    Json entries = Json::array();
    for (const Quaternion& q : t.data()) entries.push_back(Json::array({q.w, q.x, q.y, q.z}));
    Json j = Json::object();
    j["left_shape"] = shape_to_json(t.left());
    j["right_shape"] = shape_to_json(t.right());
    j["entries"] = std::move(entries);
    return j;
}

QTensor tensor_from_json(const Json& j, const std::string& name) {
    if (!j.is_object()) throw InputError("tensor '" + name + "' must be an object");
    const Shape left = shape_from_json(j, name, "left_shape");
    const Shape right = shape_from_json(j, name, "right_shape");
    const Json& entries = field(j, "entries", "tensor '" + name + "'");
    const std::size_t expected = left.count() * right.count();
    if (!entries.is_array() || entries.size() != expected) {
        throw InputError("tensor '" + name + "': entries has " +
                         (entries.is_array() ? std::to_string(entries.size()) : std::string("no")) +
                         " quaternions, expected " + std::to_string(expected) + " for shape " + left.str() + "x" +
                         right.str());
    }
    std::vector<Quaternion> data;
    data.reserve(expected);
    for (const Json& q : entries) {
        if (!q.is_array() || q.size() != 4 || !std::ranges::all_of(q, [](const Json& v) { return v.is_number(); })) {
            throw InputError("tensor '" + name + "': every entry must be [w, x, y, z]");
        }
        data.emplace_back(q[0].get<double>(), q[1].get<double>(), q[2].get<double>(), q[3].get<double>());
    }
    return QTensor(left, right, std::move(data));
}

Json problem_to_json(const ProblemInstance& inst) {
    Json j = Json::object();
    j["version"] = kFormatVersion;
    j["system"] = std::string(to_string(inst.kind));
    if (inst.eta) j["eta"] = std::string(1, axis_name(*inst.eta));
    j["tensors"] = ordered_tensors(inst.coefficients, coefficient_names(inst.kind));
    return j;
}

ProblemInstance problem_from_json(const Json& j) {
    const std::string what = "problem file";
    check_version(j, what);
    ProblemInstance inst;
    inst.kind = kind_from_json(j, what);
    if (j.contains("eta")) {
        const Json& e = j.at("eta");
        if (!e.is_string() || e.get<std::string>().size() != 1) {
            throw InputError(what + ": 'eta' must be one of \"i\", \"j\", \"k\"");
        }
        inst.eta = parse_axis(e.get<std::string>()[0]);
    }
    inst.coefficients = named_tensors(field(j, "tensors", what), what + " 'tensors'");
    return inst;
}

Json solution_to_json(const SolutionFile& sol) {
    Json j = Json::object();
    j["version"] = kFormatVersion;
    j["system"] = std::string(to_string(sol.kind));
    j["unknowns"] = ordered_tensors(sol.unknowns, unknown_names(sol.kind));
    j["params_used"] = ordered_tensors(sol.params_used, {});
    return j;
}

SolutionFile solution_from_json(const Json& j) {
    const std::string what = "solution file";
    check_version(j, what);
    SolutionFile sol;
    sol.kind = kind_from_json(j, what);
    sol.unknowns = named_tensors(field(j, "unknowns", what), what + " 'unknowns'");
    if (j.contains("params_used")) sol.params_used = named_tensors(j.at("params_used"), what + " 'params_used'");
    return sol;
}

TensorMap tensors_from_json(const Json& j) {
    if (j.is_object() && j.contains("tensors")) return named_tensors(j.at("tensors"), "'tensors'");
    return named_tensors(j, "parameter file");
}

Json tensors_to_json(const TensorMap& tensors) {
    Json j = Json::object();
    j["tensors"] = ordered_tensors(tensors, {});
    return j;
}

Json report_to_json(const SolveReport& report) {
    Json conds = Json::array();
    for (const Condition& c : report.conditions) {
        Json e = Json::object();
        e["name"] = c.name;
        e["lhs_norm"] = c.lhs_norm;
        e["threshold"] = c.threshold;
        e["pass"] = c.pass;
        conds.push_back(std::move(e));
    }
    Json j = Json::object();
    j["consistent"] = report.consistent;
    j["conditions"] = std::move(conds);
    return j;
}

Json residual_to_json(const ResidualReport& report) {
    Json eqs = Json::array();
    for (const EquationResidual& r : report.equations) {
        Json e = Json::object();
        e["equation"] = r.equation;
        e["absolute"] = r.absolute;
        e["relative"] = r.relative;
        eqs.push_back(std::move(e));
    }
    Json j = Json::object();
    j["max_relative"] = report.max_relative;
    j["equations"] = std::move(eqs);
    return j;
}

Json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path.string() + ": invalid JSON: " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << dump(j);
    if (!out) throw InputError("failed writing " + path.string());
}

} // namespace qts::io
