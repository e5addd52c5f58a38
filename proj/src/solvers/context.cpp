#include "context.hpp"

#include "qts/errors.hpp"

namespace qts::detail {

QTensor Context::param(const std::string& name, const Shape& left, const Shape& right) {
    QTensor value;
    if (auto it = params_.find(name); it != params_.end()) {
        if (it->second.left() != left || it->second.right() != right) {
            throw ShapeMismatch("free parameter '" + name + "' has shape " + it->second.left().str() + "x" +
                                it->second.right().str() + ", expected " + left.str() + "x" + right.str());
        }
        value = it->second;
    } else if (opts_.generator) {
        value = opts_.generator(name, left, right);
    } else {
        value = zero(left, right);
    }
    used_.insert_or_assign(name, value);
    return value;
}

QTensor take_first_rows(const QTensor& block, const Shape& first, const Shape& second) {
    return row_block(identity(first), zero(first, second)) * block;
}

QTensor take_first_cols(const QTensor& block, const Shape& first, const Shape& second) {
    return block * col_block(identity(first), zero(second, first));
}

void pair_conditions(Context& ctx, const QTensor& A, const QTensor& B, const QTensor& C, const QTensor& D,
                     const QTensor& E, const PairNames& n) {
    const QTensor P = ctx.keep(n.P, mul(ctx.R(A), C));
    const QTensor Q = ctx.keep(n.Q, mul(D, ctx.L(B)));
    ctx.keep(n.S, mul(C, ctx.L(P)));
    ctx.check("R_{" + n.P + "} R_{" + n.A + "} " + n.E + " = 0", mul(ctx.R(P), ctx.R(A), E), P, A, E);
    ctx.check(n.E + " L_{" + n.B + "} L_{" + n.Q + "} = 0", mul(E, ctx.L(B), ctx.L(Q)), E, B, Q);
    ctx.check("R_{" + n.A + "} " + n.E + " L_{" + n.D + "} = 0", mul(ctx.R(A), E, ctx.L(D)), A, E, D);
    ctx.check("R_{" + n.C + "} " + n.E + " L_{" + n.B + "} = 0", mul(ctx.R(C), E, ctx.L(B)), C, E, B);
}

PairSolution pair_solution(Context& ctx, const QTensor& A, const QTensor& B, const QTensor& C, const QTensor& D,
                           const QTensor& E, const std::array<std::string, 5>& params) {
    const QTensor P = mul(ctx.R(A), C);
    const QTensor Q = mul(D, ctx.L(B));
    const QTensor S = mul(C, ctx.L(P));
    const QTensor Ad = ctx.dag(A), Bd = ctx.dag(B), Cd = ctx.dag(C), Dd = ctx.dag(D);
    const QTensor Pd = ctx.dag(P), Qd = ctx.dag(Q), Sd = ctx.dag(S);

    const QTensor U1 = ctx.param(params[0], C.right(), D.left());
    const QTensor U2 = ctx.param(params[1], C.right(), D.left());
    const QTensor U3 = ctx.param(params[2], C.right(), D.left());
    const QTensor U4 = ctx.param(params[3], A.right(), B.left());
    const QTensor U5 = ctx.param(params[4], A.right(), B.left());

    QTensor X = mul(Ad, E, Bd) - mul(Ad, C, Pd, E, Bd) - mul(Ad, S, Cd, E, Qd, D, Bd) -
                mul(Ad, S, U2, ctx.R(Q), D, Bd) + mul(ctx.L(A), U4) + mul(U5, ctx.R(B));
    QTensor Y = mul(Pd, E, Dd) + mul(Sd, S, Cd, E, Qd) + mul(ctx.L(P), ctx.L(S), U1) +
                mul(ctx.L(P), U2, ctx.R(Q)) + mul(U3, ctx.R(D));
    return {std::move(X), std::move(Y)};
}

SolveResult finish(Context& ctx, std::optional<TensorMap> unknowns) {
    SolveResult result;
    result.report = std::move(ctx.report());
    if (unknowns && result.report.consistent) {
        result.solution = GeneralSolution{std::move(*unknowns), std::move(ctx.params_used()),
                                          std::move(ctx.intermediates())};
    }
    return result;
}

} // namespace qts::detail
