#include "qts/solvers.hpp"

#include "context.hpp"
#include "qts/equations.hpp"
#include "qts/errors.hpp"

#include <algorithm>

namespace qts {

using detail::Context;
using detail::mul;

namespace {

using Unknowns = std::optional<TensorMap>;

Unknowns run_pair(Context& ctx, const ProblemInstance& inst) {
    const QTensor &A = inst.get("A"), &B = inst.get("B"), &C = inst.get("C"), &D = inst.get("D"),
                  &E = inst.get("E");
    detail::pair_conditions(ctx, A, B, C, D, E, {"A", "B", "C", "D", "E", "P", "Q", "S"});
    if (!ctx.solving() || !ctx.report().consistent) return std::nullopt;
    auto [X, Y] = detail::pair_solution(ctx, A, B, C, D, E, {"U1", "U2", "U3", "U4", "U5"});
    return TensorMap{{"X", std::move(X)}, {"Y", std::move(Y)}};
}

Unknowns run_eq31(Context& ctx, const ProblemInstance& inst) {
    const QTensor &A1 = inst.get("A1"), &B1 = inst.get("B1"), &A2 = inst.get("A2"), &B2 = inst.get("B2");
    const QTensor &C3 = inst.get("C3"), &D3 = inst.get("D3"), &C4 = inst.get("C4"), &D4 = inst.get("D4");
    const QTensor& E1 = inst.get("E1");

    // Outer pair A1 X1 B1 + A2 X2 B2 = E1 - A2 (...) B1; the bracket drops out
    // of three of its four conditions.
    detail::pair_conditions(ctx, A1, B1, A2, B2, E1, {"A1", "B1", "A2", "B2", "E1", "M1", "N1", "S1"});
    // R_A1 E1 L_B2 does not vanish in general; it becomes the hat system below.
    auto& conds = ctx.report().conditions;
    conds.erase(conds.end() - 2);
    ctx.report().consistent = std::ranges::all_of(conds, &Condition::pass);

    const QTensor& M1 = ctx.intermediates().at("M1");
    const QTensor LB2 = ctx.L(B2);
    const QTensor& A1h = ctx.keep("Â1", mul(M1, C3));
    const QTensor& A2h = ctx.keep("Â2", mul(M1, C4));
    const QTensor& B1h = ctx.keep("B̂1", mul(D3, B1, LB2));
    const QTensor& B2h = ctx.keep("B̂2", mul(D4, B1, LB2));
    const QTensor& E1h = ctx.keep("Ê1", mul(ctx.R(A1), E1, LB2));
    detail::pair_conditions(ctx, A1h, B1h, A2h, B2h, E1h, {"Â1", "B̂1", "Â2", "B̂2", "Ê1", "M̂1", "N̂1", "Ŝ1"});
    if (!ctx.solving() || !ctx.report().consistent) return std::nullopt;

    auto [X3, W] = detail::pair_solution(ctx, A1h, B1h, A2h, B2h, E1h, {"Û1", "Û2", "Û3", "Û4", "Û5"});
    const QTensor& E1g = ctx.keep("È1", E1 - mul(A2, mul(C3, X3, D3) + mul(C4, W, D4), B1));
    auto [X1, X2] = detail::pair_solution(ctx, A1, B1, A2, B2, E1g, {"U1", "U2", "U3", "U4", "U5"});
    return TensorMap{{"X1", std::move(X1)}, {"X2", std::move(X2)}, {"X3", std::move(X3)}, {"W", std::move(W)}};
}

Unknowns run_coupled14(Context& ctx, const ProblemInstance& inst) {
    const auto g = [&](const char* n) -> const QTensor& { return inst.get(n); };
    const detail::CoreInputs in{g("A1"), g("B1"), g("E1"), g("A2"), g("B2"), g("E2"), g("A3"),
                                g("B3"), g("E3"), g("E4"), g("A4"), g("B4"), g("C4"), g("D4"),
                                g("P"),  g("A5"), g("B5"), g("C5"), g("D5"), g("Q")};
    const detail::CoreNames names{"A4", "B4", "C4", "D4", "P", "A5", "B5", "C5", "D5", "Q", "A6", "B6", "A7", "B7"};
    auto core = detail::coupled_core(ctx, in, names);
    if (!core) return std::nullopt;
    return TensorMap{{"X", std::move(core->X)}, {"Y", std::move(core->Y)}, {"Z", std::move(core->Z)}};
}

struct Main15Parts {
    TensorMap unknowns;
    QTensor E1g, E2g; // right-hand sides of the two final pair equations
};

std::optional<Main15Parts> run_main15_parts(Context& ctx, const ProblemInstance& inst) {
    const auto g = [&](const char* n) -> const QTensor& { return inst.get(n); };
    const QTensor &A4 = g("A4"), &B4 = g("B4"), &A5 = g("A5"), &B5 = g("B5");
    const QTensor &E5 = g("E5"), &E6 = g("E6"), &E7 = g("E7"), &E8 = g("E8");
    const QTensor &A6 = g("A6"), &B6 = g("B6"), &A7 = g("A7"), &B7 = g("B7"), &E9 = g("E9");
    const QTensor &A8 = g("A8"), &B8 = g("B8"), &A9 = g("A9"), &B9 = g("B9"), &E10 = g("E10");
    const QTensor &C3 = g("C3"), &D3 = g("D3"), &C4 = g("C4"), &D4 = g("D4");
    const QTensor &H3 = g("H3"), &J3 = g("J3"), &H4 = g("H4"), &J4 = g("J4");

    const QTensor A4d = ctx.dag(A4), B4d = ctx.dag(B4), A5d = ctx.dag(A5), B5d = ctx.dag(B5);
    const QTensor& A6h = ctx.keep("Â6", mul(A6, ctx.L(A4)));
    const QTensor& B7h = ctx.keep("B̂7", mul(ctx.R(B4), B7));
    const QTensor& E9h = ctx.keep("Ê9", E9 - mul(A6, A4d, E5, B6) - mul(A7, E6, B4d, B7));
    const QTensor& M11 = ctx.keep("M11", mul(ctx.R(A6h), A7));
    const QTensor& N11 = ctx.keep("N11", mul(B7h, ctx.L(B6)));
    ctx.keep("S11", mul(A7, ctx.L(M11)));
    const QTensor LB7h = ctx.L(B7h);
    const QTensor& A4h = ctx.keep("Â4", mul(M11, C3));
    const QTensor& C4h = ctx.keep("Ĉ4", mul(M11, C4));
    const QTensor& B4h = ctx.keep("B̂4", mul(D3, B6, LB7h));
    const QTensor& D4h = ctx.keep("D̂4", mul(D4, B6, LB7h));
    const QTensor& Ph = ctx.keep("P̂", mul(ctx.R(A6h), E9h, LB7h));

    const QTensor& A8h = ctx.keep("Â8", mul(A8, ctx.L(A5)));
    const QTensor& B9h = ctx.keep("B̂9", mul(ctx.R(B5), B9));
    const QTensor& E10h = ctx.keep("Ê10", E10 - mul(A8, A5d, E7, B8) - mul(A9, E8, B5d, B9));
    const QTensor& M22 = ctx.keep("M22", mul(ctx.R(A8h), A9));
    const QTensor& N22 = ctx.keep("N22", mul(B9h, ctx.L(B8)));
    ctx.keep("S22", mul(A9, ctx.L(M22)));
    const QTensor LB9h = ctx.L(B9h);
    const QTensor& A5h = ctx.keep("Â5", mul(M22, H3));
    const QTensor& C5h = ctx.keep("Ĉ5", mul(M22, H4));
    const QTensor& B5h = ctx.keep("B̂5", mul(J3, B8, LB9h));
    const QTensor& D5h = ctx.keep("D̂5", mul(J4, B8, LB9h));
    const QTensor& Qh = ctx.keep("Q̂", mul(ctx.R(A8h), E10h, LB9h));

    ctx.check("R_{A4} E5 = 0", mul(ctx.R(A4), E5), A4, E5);
    ctx.check("E6 L_{B4} = 0", mul(E6, ctx.L(B4)), E6, B4);
    ctx.check("R_{A5} E7 = 0", mul(ctx.R(A5), E7), A5, E7);
    ctx.check("E8 L_{B5} = 0", mul(E8, ctx.L(B5)), E8, B5);
    ctx.check("R_{M11} R_{Â6} Ê9 = 0", mul(ctx.R(M11), ctx.R(A6h), E9h), M11, A6h, E9h);
    ctx.check("Ê9 L_{B6} L_{N11} = 0", mul(E9h, ctx.L(B6), ctx.L(N11)), E9h, B6, N11);
    ctx.check("R_{A7} Ê9 L_{B6} = 0", mul(ctx.R(A7), E9h, ctx.L(B6)), A7, E9h, B6);
    ctx.check("R_{M22} R_{Â8} Ê10 = 0", mul(ctx.R(M22), ctx.R(A8h), E10h), M22, A8h, E10h);
    ctx.check("Ê10 L_{B8} L_{N22} = 0", mul(E10h, ctx.L(B8), ctx.L(N22)), E10h, B8, N22);
    ctx.check("R_{A9} Ê10 L_{B8} = 0", mul(ctx.R(A9), E10h, ctx.L(B8)), A9, E10h, B8);

    const detail::CoreInputs in{g("A1"), g("B1"), g("E1"), g("A2"), g("B2"), g("E2"), g("A3"),
                                g("B3"), g("E3"), g("E4"), A4h,     B4h,     C4h,     D4h,
                                Ph,      A5h,     B5h,     C5h,     D5h,     Qh};
    const detail::CoreNames names{"Â4", "B̂4", "Ĉ4", "D̂4", "P̂", "Â5", "B̂5", "Ĉ5", "D̂5", "Q̂", "C6", "D6", "C7", "D7"};
    auto core = detail::coupled_core(ctx, in, names);
    if (!core) return std::nullopt;

    const QTensor& X3 = core->X;
    const QTensor& Y3 = core->Y;
    const QTensor& W = core->Z;
    QTensor E1g = ctx.keep("È1", E9h - mul(A7, mul(C3, X3, D3) + mul(C4, W, D4), B6));
    QTensor E2g = ctx.keep("È2", E10h - mul(A9, mul(H3, Y3, J3) + mul(H4, W, J4), B8));

    auto [V11, V22] = detail::pair_solution(ctx, A6h, B6, A7, B7h, E1g, {"T11", "T21", "T31", "T41", "T51"});
    auto [V33, V44] = detail::pair_solution(ctx, A8h, B8, A9, B9h, E2g, {"J11", "J21", "J31", "J41", "J51"});
    ctx.keep("V11", V11);
    ctx.keep("V22", V22);
    ctx.keep("V33", V33);
    ctx.keep("V44", V44);

    Main15Parts out;
    out.unknowns.emplace("X1", mul(A4d, E5) + mul(ctx.L(A4), V11));
    out.unknowns.emplace("X2", mul(E6, B4d) + mul(V22, ctx.R(B4)));
    out.unknowns.emplace("Y1", mul(A5d, E7) + mul(ctx.L(A5), V33));
    out.unknowns.emplace("Y2", mul(E8, B5d) + mul(V44, ctx.R(B5)));
    out.unknowns.emplace("X3", std::move(core->X));
    out.unknowns.emplace("Y3", std::move(core->Y));
    out.unknowns.emplace("W", std::move(core->Z));
    out.E1g = std::move(E1g);
    out.E2g = std::move(E2g);
    return out;
}

Unknowns run_main15(Context& ctx, const ProblemInstance& inst) {
    auto parts = run_main15_parts(ctx, inst);
    if (!parts) return std::nullopt;
    return std::move(parts->unknowns);
}

// Injects the zero and identity blocks that turn a sys16 instance into a
// main15 instance.
ProblemInstance specialize_sys16(const ProblemInstance& inst) {
    ProblemInstance m;
    m.kind = SystemKind::main15;
    m.coefficients = inst.coefficients;
    const QTensor &A6 = inst.get("A6"), &B7 = inst.get("B7"), &E9 = inst.get("E9");
    const QTensor &A8 = inst.get("A8"), &B9 = inst.get("B9"), &E10 = inst.get("E10");
    auto& c = m.coefficients;
    c.insert_or_assign("A4", zero(A6.left(), A6.right()));
    c.insert_or_assign("E5", zero(A6.left(), E9.right()));
    c.insert_or_assign("B4", zero(B7.left(), B7.right()));
    c.insert_or_assign("E6", zero(E9.left(), B7.right()));
    c.insert_or_assign("B6", identity(E9.right()));
    c.insert_or_assign("A7", identity(E9.left()));
    c.insert_or_assign("A5", zero(A8.left(), A8.right()));
    c.insert_or_assign("E7", zero(A8.left(), E10.right()));
    c.insert_or_assign("B5", zero(B9.left(), B9.right()));
    c.insert_or_assign("E8", zero(E10.left(), B9.right()));
    c.insert_or_assign("B8", identity(E10.right()));
    c.insert_or_assign("A9", identity(E10.left()));
    return m;
}

Unknowns run_sys16(Context& ctx, const ProblemInstance& inst) {
    return run_main15(ctx, specialize_sys16(inst));
}

// A X + Y B = C:  X = A^+ C - Z B + L_A U,  Y = R_A C B^+ + A Z + V R_B.
std::pair<QTensor, QTensor> one_sided_pair(Context& ctx, const QTensor& A, const QTensor& B, const QTensor& C,
                                           const std::array<std::string, 3>& names) {
    const QTensor Z = ctx.param(names[0], A.right(), B.left());
    const QTensor U = ctx.param(names[1], A.right(), C.right());
    const QTensor V = ctx.param(names[2], C.left(), B.left());
    QTensor X = mul(ctx.dag(A), C) - mul(Z, B) + mul(ctx.L(A), U);
    QTensor Y = mul(ctx.R(A), C, ctx.dag(B)) + mul(A, Z) + mul(V, ctx.R(B));
    return {std::move(X), std::move(Y)};
}

Unknowns run_sys16_direct(Context& ctx, const ProblemInstance& inst) {
    auto parts = run_main15_parts(ctx, specialize_sys16(inst));
    if (!parts) return std::nullopt;
    auto [X1, X2] = one_sided_pair(ctx, inst.get("A6"), inst.get("B7"), parts->E1g, {"T̂21", "T41", "T31"});
    auto [Y1, Y2] = one_sided_pair(ctx, inst.get("A8"), inst.get("B9"), parts->E2g, {"Ĵ21", "J41", "J31"});
    TensorMap& u = parts->unknowns;
    u.insert_or_assign("X1", std::move(X1));
    u.insert_or_assign("X2", std::move(X2));
    u.insert_or_assign("Y1", std::move(Y1));
    u.insert_or_assign("Y2", std::move(Y2));
    return std::move(u);
}

void require_eta_hermitian(const ProblemInstance& inst, const char* name, EtaAxis eta, double tol) {
    const QTensor& e = inst.get(name);
    if (e.left() != e.right()) {
        throw EtaSymmetryViolation(std::string(name) + " must be square to be eta-Hermitian");
    }
    const double gap = frob_norm(e - eta_conj_transpose(e, eta));
    if (gap > tol * (1.0 + frob_norm(e))) {
        throw EtaSymmetryViolation(std::string(name) + " is not " + axis_name(eta) + "-Hermitian (|E - E^η*| = " +
                                   std::to_string(gap) + ")");
    }
}

ProblemInstance auxiliary_sys16(const ProblemInstance& inst, EtaAxis eta) {
    auto g = [&](const char* n) -> const QTensor& { return inst.get(n); };
    auto et = [&](const char* n) { return eta_conj_transpose(inst.get(n), eta); };
    ProblemInstance aux;
    aux.kind = SystemKind::sys16;
    aux.coefficients = {{"A1", g("A1")}, {"B1", et("A1")}, {"E1", g("E1")},  {"A2", g("A2")},  {"B2", et("A2")},
                        {"E2", g("E2")}, {"A3", g("A3")},  {"B3", et("A3")}, {"E3", g("E3")},  {"E4", et("E3")},
                        {"A6", g("A6")}, {"B7", et("A6")}, {"C3", g("C3")},  {"D3", et("C3")}, {"C4", g("C4")},
                        {"D4", et("C4")}, {"E9", g("E9")}, {"A8", g("A8")},  {"B9", et("A8")}, {"H3", g("H3")},
                        {"J3", et("H3")}, {"H4", g("H4")}, {"J4", et("H4")}, {"E10", g("E10")}};
    return aux;
}

QTensor symmetrize(const QTensor& a, const QTensor& b_eta_source, EtaAxis eta) {
    return scale(a + eta_conj_transpose(b_eta_source, eta), 0.5);
}

Unknowns run_eta17(Context& ctx, const ProblemInstance& inst) {
    const EtaAxis eta = *inst.eta;
    for (const char* name : {"E1", "E2", "E9", "E10"}) require_eta_hermitian(inst, name, eta, ctx.options().tol);
    const ProblemInstance aux = auxiliary_sys16(inst, eta);
    validate_instance(aux);
    auto aux_unknowns = run_sys16(ctx, aux);
    if (!aux_unknowns) return std::nullopt;
    const TensorMap& a = *aux_unknowns;
    for (auto [from, to] : {std::pair{"X1", "X11"}, {"X2", "X12"}, {"X3", "X33"}, {"Y1", "Y11"}, {"Y2", "Y12"},
                            {"Y3", "Y33"}, {"W", "W1"}}) {
        ctx.keep(to, a.at(from));
    }
    TensorMap out;
    out.emplace("X1", symmetrize(a.at("X1"), a.at("X2"), eta));
    out.emplace("Y1", symmetrize(a.at("Y1"), a.at("Y2"), eta));
    out.emplace("X3", symmetrize(a.at("X3"), a.at("X3"), eta));
    out.emplace("Y3", symmetrize(a.at("Y3"), a.at("Y3"), eta));
    out.emplace("W", symmetrize(a.at("W"), a.at("W"), eta));
    return out;
}

using Runner = Unknowns (*)(Context&, const ProblemInstance&);

SolveResult run(Runner runner, SystemKind expected, const ProblemInstance& inst, const FreeParams& params,
                const SolveOptions& opts, bool solving) {
    if (inst.kind != expected) {
        throw InputError("solver for " + std::string(to_string(expected)) + " called on a " +
                         std::string(to_string(inst.kind)) + " problem");
    }
    validate_instance(inst);
    Context ctx(params, opts, solving);
    auto unknowns = runner(ctx, inst);
    return detail::finish(ctx, std::move(unknowns));
}

Runner runner_for(SystemKind kind) {
    switch (kind) {
    case SystemKind::pair11: return &run_pair;
    case SystemKind::eq31: return &run_eq31;
    case SystemKind::coupled14: return &run_coupled14;
    case SystemKind::main15: return &run_main15;
    case SystemKind::sys16: return &run_sys16;
    case SystemKind::eta17: return &run_eta17;
    }
    throw InputError("unknown system kind");
}

} // namespace

SolveResult solve_pair(const ProblemInstance& inst, const FreeParams& params, const SolveOptions& opts) {
    return run(&run_pair, SystemKind::pair11, inst, params, opts, true);
}
SolveResult solve_eq31(const ProblemInstance& inst, const FreeParams& params, const SolveOptions& opts) {
    return run(&run_eq31, SystemKind::eq31, inst, params, opts, true);
}
SolveResult solve_coupled14(const ProblemInstance& inst, const FreeParams& params, const SolveOptions& opts) {
    return run(&run_coupled14, SystemKind::coupled14, inst, params, opts, true);
}
SolveResult solve_main15(const ProblemInstance& inst, const FreeParams& params, const SolveOptions& opts) {
    return run(&run_main15, SystemKind::main15, inst, params, opts, true);
}
SolveResult solve_sys16(const ProblemInstance& inst, const FreeParams& params, const SolveOptions& opts) {
    return run(&run_sys16, SystemKind::sys16, inst, params, opts, true);
}
SolveResult solve_sys16_direct(const ProblemInstance& inst, const FreeParams& params, const SolveOptions& opts) {
    return run(&run_sys16_direct, SystemKind::sys16, inst, params, opts, true);
}
SolveResult solve_eta17(const ProblemInstance& inst, const FreeParams& params, const SolveOptions& opts) {
    return run(&run_eta17, SystemKind::eta17, inst, params, opts, true);
}

SolveResult solve(const ProblemInstance& inst, const FreeParams& params, const SolveOptions& opts) {
    return run(runner_for(inst.kind), inst.kind, inst, params, opts, true);
}

SolveReport check_conditions(const ProblemInstance& inst, const SolveOptions& opts) {
    return run(runner_for(inst.kind), inst.kind, inst, {}, opts, false).report;
}

} // namespace qts
