#pragma once

#include "qts/problem.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qts {

// A coefficient tensor, optionally replaced by its eta-conjugate transpose.
struct Factor {
    std::string name;
    bool eta = false;
};

// left[0] * ... * left[n-1] * U * right[0] * ... * right[m-1], where U is the
// unknown or, with unknown_eta, its eta-conjugate transpose.
struct Term {
    std::vector<Factor> left;
    std::string unknown;
    std::vector<Factor> right;
    bool unknown_eta = false;
};

struct Equation {
    std::string name;
    std::vector<Term> terms;
    std::string rhs;
};

const std::vector<Equation>& equations(SystemKind kind);
std::vector<std::string> unknown_names(SystemKind kind);
std::vector<std::string> coefficient_names(SystemKind kind);

struct TensorShape {
    Shape left;
    Shape right;
};

// Checks every required coefficient is present and every equation is
// conformable; returns the shape each unknown must have. Throws InputError
// for missing names and ShapeMismatch naming the offending tensor.
std::map<std::string, TensorShape> validate_instance(const ProblemInstance& inst);

} // namespace qts
