#pragma once

#include "qts/problem.hpp"

namespace qts {

// A X B + C Y D = E.
SolveResult solve_pair(const ProblemInstance& inst, const FreeParams& params = {}, const SolveOptions& opts = {});

// A1 X1 B1 + A2 X2 B2 + A2 (C3 X3 D3 + C4 W D4) B1 = E1.
SolveResult solve_eq31(const ProblemInstance& inst, const FreeParams& params = {}, const SolveOptions& opts = {});

// Two one-unknown two-sided equations, a two-sided constraint on Z and two
// coupled equations (see equations(SystemKind::coupled14)).
SolveResult solve_coupled14(const ProblemInstance& inst, const FreeParams& params = {},
                            const SolveOptions& opts = {});

// The seven-unknown constrained system.
SolveResult solve_main15(const ProblemInstance& inst, const FreeParams& params = {}, const SolveOptions& opts = {});

// Special case of main15 with A4 = B4 = A5 = B5 = 0 and B6 = B8 = A7 = A9 = I.
SolveResult solve_sys16(const ProblemInstance& inst, const FreeParams& params = {}, const SolveOptions& opts = {});

// Same system, but X1, X2, Y1, Y2 come from the closed form for A X + Y B = C
// instead of the main15 route. Used to cross-check the specialization.
SolveResult solve_sys16_direct(const ProblemInstance& inst, const FreeParams& params = {},
                               const SolveOptions& opts = {});

// eta-Hermitian X3, Y3, W. Throws EtaSymmetryViolation unless E1, E2, E9 and
// E10 are eta-Hermitian to opts.tol.
SolveResult solve_eta17(const ProblemInstance& inst, const FreeParams& params = {}, const SolveOptions& opts = {});

SolveResult solve(const ProblemInstance& inst, const FreeParams& params = {}, const SolveOptions& opts = {});

// Evaluates the solvability conditions only.
SolveReport check_conditions(const ProblemInstance& inst, const SolveOptions& opts = {});

} // namespace qts
