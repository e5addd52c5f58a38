#pragma once

#include "qts/problem.hpp"
#include "qts/quaternion.hpp"
#include "qts/qtensor.hpp"

#include <array>
#include <random>
#include <string>

namespace qts::testing {

using Rng = std::mt19937_64;

QTensor random_tensor(Rng& rng, const Shape& left, const Shape& right);

// Random tensor of rank at most `rank` (as a matrix over the unfolded indices).
QTensor random_low_rank(Rng& rng, const Shape& left, const Shape& right, std::size_t rank);

// Random shape with order 1..max_order and dims 1..max_dim.
Shape random_shape(Rng& rng, std::size_t max_order = 2, std::size_t max_dim = 3);

// |a - b|_F / (1 + |b|_F)
double rel_diff(const QTensor& a, const QTensor& b);

// Relative violations of the four Penrose conditions for a candidate inverse p
// of d: d p d = d, p d p = p, (d p)^* = d p, (p d)^* = p d.
std::array<double, 4> penrose_errors(const QTensor& d, const QTensor& p);

// Random X with X = X^eta*.
QTensor random_eta_hermitian(Rng& rng, const Shape& shape, EtaAxis eta);

// Square shape used for every index group in planted instances: dims (2, 2).
Shape planted_shape();

struct Planted {
    ProblemInstance instance;
    TensorMap plant;
};

// Random coefficients of random rank 1..3 over (2,2)x(2,2), random unknowns,
// right-hand sides computed from the unknowns. Consistent by construction.
Planted planted(Rng& rng, SystemKind kind, EtaAxis eta = EtaAxis::i);

// Adds noise of the given size to one right-hand side, chosen at random among
// those whose coefficients are rank deficient enough for this to break
// solvability in general.
void perturb(Rng& rng, ProblemInstance& inst, double size);

// Generator for SolveOptions: random entries for every free parameter.
ParamGenerator random_params(Rng& rng);

} // namespace qts::testing
