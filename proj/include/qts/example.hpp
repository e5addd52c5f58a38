#pragma once

#include "qts/problem.hpp"

namespace qts {

// Built-in main15 data set with 2x2x2x2 integer quaternion tensors.
ProblemInstance example_problem();

// The solution (X1, X2, X3, Y1, Y2, Y3, W) listed with the data set.
TensorMap example_solution();

} // namespace qts
