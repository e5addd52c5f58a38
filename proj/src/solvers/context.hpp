#pragma once

#include "qts/problem.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>

namespace qts::detail {

template <typename... Rest>
QTensor mul(const QTensor& a, const QTensor& b, const Rest&... rest) {
    if constexpr (sizeof...(Rest) == 0) return einstein_product(a, b);
    else return mul(einstein_product(a, b), rest...);
}

// Bookkeeping shared by every solver: pseudoinverses with the caller's rank
// options, the condition list, recorded intermediates and free parameters.
class Context {
public:
    Context(const FreeParams& params, const SolveOptions& opts, bool solving)
        : params_(params), opts_(opts), solving_(solving) {}

    bool solving() const { return solving_; }
    const SolveOptions& options() const { return opts_; }

    QTensor dag(const QTensor& a) const { return pinv(a, opts_.pinv); }
    QTensor L(const QTensor& a) const { return proj_left(a, opts_.pinv); }
    QTensor R(const QTensor& a) const { return proj_right(a, opts_.pinv); }

    // "t = 0" passes when |t| <= tol * (1 + largest norm among the inputs).
    template <typename... Inputs>
    void check(std::string name, const QTensor& t, const Inputs&... inputs) {
        double scale = 0.0;
        ((scale = std::max(scale, frob_norm(inputs))), ...);
        Condition c;
        c.name = std::move(name);
        c.lhs_norm = frob_norm(t);
        c.threshold = opts_.tol * (1.0 + scale);
        c.pass = c.lhs_norm <= c.threshold;
        report_.consistent = report_.consistent && c.pass;
        report_.conditions.push_back(std::move(c));
    }

    const QTensor& keep(const std::string& name, QTensor t) {
        return intermediates_.insert_or_assign(name, std::move(t)).first->second;
    }

    QTensor param(const std::string& name, const Shape& left, const Shape& right);

    SolveReport& report() { return report_; }
    IntermediateSet& intermediates() { return intermediates_; }
    FreeParams& params_used() { return used_; }

private:
    const FreeParams& params_;
    const SolveOptions& opts_;
    bool solving_;
    SolveReport report_;
    IntermediateSet intermediates_;
    FreeParams used_;
};

// (I 0) * block: the rows belonging to the first summand of a block space.
QTensor take_first_rows(const QTensor& block, const Shape& first, const Shape& second);
// block * (I; 0): the columns belonging to the first summand.
QTensor take_first_cols(const QTensor& block, const Shape& first, const Shape& second);

struct PairNames {
    std::string A, B, C, D, E; // coefficient symbols for condition names
    std::string P, Q, S;       // names for the derived R_A C, D L_B, C L_P
};

// Conditions of A X B + C Y D = E.
void pair_conditions(Context& ctx, const QTensor& A, const QTensor& B, const QTensor& C, const QTensor& D,
                     const QTensor& E, const PairNames& names);

struct PairSolution {
    QTensor X, Y;
};

// General solution of A X B + C Y D = E with free parameters named
// params[0..4] (U1..U5 in the usual notation).
PairSolution pair_solution(Context& ctx, const QTensor& A, const QTensor& B, const QTensor& C, const QTensor& D,
                           const QTensor& E, const std::array<std::string, 5>& params);

struct CoreNames {
    std::string A4, B4, C4, D4, P, A5, B5, C5, D5, Q;
    std::string C6, D6, C7, D7; // C4 L_A3, R_B3 D4, C5 L_A3, R_B3 D5
};

struct CoreInputs {
    const QTensor &A1, &B1, &E1, &A2, &B2, &E2, &A3, &B3, &E3, &E4;
    const QTensor &A4, &B4, &C4, &D4, &P, &A5, &B5, &C5, &D5, &Q;
};

struct CoreSolution {
    QTensor X, Y, Z;
};

// The coupled system A1 X B1 = E1, A2 Y B2 = E2, A3 Z = E3, Z B3 = E4,
// A4 X B4 + C4 Z D4 = P, A5 Y B5 + C5 Z D5 = Q. Appends its conditions and
// intermediates to ctx; returns a solution only when ctx.solving().
std::optional<CoreSolution> coupled_core(Context& ctx, const CoreInputs& in, const CoreNames& names);

SolveResult finish(Context& ctx, std::optional<TensorMap> unknowns);

} // namespace qts::detail
