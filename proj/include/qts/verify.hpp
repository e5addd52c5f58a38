#pragma once

#include "qts/problem.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qts {

struct EquationResidual {
    std::string equation;
    double absolute = 0.0; // |LHS - RHS|_F
    double relative = 0.0; // absolute / |RHS|_F, or absolute when RHS = 0
};

struct ResidualReport {
    std::vector<EquationResidual> equations;
    double max_relative = 0.0;
};

// Evaluates every defining equation of inst.kind with the given unknowns.
// Throws InputError when an unknown is missing, ShapeMismatch when one has the
// wrong shape.
ResidualReport residual(const ProblemInstance& inst, const TensorMap& unknowns);

struct OracleOptions {
    double tol = 1e-8;
    std::size_t max_unknown_reals = 20000;
};

struct OracleResult {
    bool consistent = false;
    // min_residual in [tol, 10 tol]: too close to call either way.
    bool indeterminate = false;
    // Least-squares residual of the real system, with each equation's rows
    // scaled to unit norm, relative to the scaled right-hand side.
    double min_residual = 0.0;
    std::size_t unknown_reals = 0;
    std::size_t equation_reals = 0;
};

// Decides solvability by brute-force real least squares: each unknown entry is
// four real variables and each product a*x*b becomes a 4x4 real block. Only raw
// tensor entries are read, so the verdict does not depend on the tensor
// algebra it is used to check. For eta17 the eta-Hermitian constraints on X3,
// Y3 and W are added as equations. Throws SizeCapExceeded above the cap.
OracleResult oracle_consistency(const ProblemInstance& inst, const OracleOptions& opts = {});

// Solvability conditions only, without building a solution.
SolveReport audit_conditions(const ProblemInstance& inst, const SolveOptions& opts = {});

} // namespace qts
