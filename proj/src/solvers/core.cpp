#include "context.hpp"

namespace qts::detail {

namespace {

struct BlockPair {
    QTensor first, second;
};

// Solves the block equation Ab U + V Bb = rhs, where Ab = (F1 F2) and
// Bb = (G1; G2), and returns the first block of U and of V:
//   U1 = (I 0)(Ab^+ rhs - Ab^+ H2 Bb + L_Ab H1)
//   V1 = (R_Ab rhs Bb^+ + Ab Ab^+ H2 + H3 R_Bb)(I; 0)
BlockPair block_solution(Context& ctx, const QTensor& Ab, const QTensor& Bb, const QTensor& rhs,
                         const Shape& row_first, const Shape& row_second, const Shape& col_first,
                         const Shape& col_second, const std::array<std::string, 3>& h) {
    const QTensor H1 = ctx.param(h[0], Ab.right(), rhs.right());
    const QTensor H2 = ctx.param(h[1], Ab.left(), Bb.left());
    const QTensor H3 = ctx.param(h[2], rhs.left(), Bb.left());
    const QTensor Ad = ctx.dag(Ab), Bd = ctx.dag(Bb);
    QTensor u = take_first_rows(mul(Ad, rhs) - mul(Ad, H2, Bb) + mul(ctx.L(Ab), H1), row_first, row_second);
    QTensor v = take_first_cols(mul(ctx.R(Ab), rhs, Bd) + mul(Ab, Ad, H2) + mul(H3, ctx.R(Bb)), col_first, col_second);
    return {std::move(u), std::move(v)};
}

std::string Rn(const std::string& s) { return "R_{" + s + "}"; }
std::string Ln(const std::string& s) { return "L_{" + s + "}"; }

} // namespace

std::optional<CoreSolution> coupled_core(Context& ctx, const CoreInputs& in, const CoreNames& nm) {
    const QTensor &A1 = in.A1, &B1 = in.B1, &E1 = in.E1, &A2 = in.A2, &B2 = in.B2, &E2 = in.E2;
    const QTensor &A3 = in.A3, &B3 = in.B3, &E3 = in.E3, &E4 = in.E4;
    const QTensor &A4 = in.A4, &B4 = in.B4, &C4 = in.C4, &D4 = in.D4, &Pt = in.P;
    const QTensor &A5 = in.A5, &B5 = in.B5, &C5 = in.C5, &D5 = in.D5, &Qt = in.Q;
    auto dag = [&](const QTensor& t) { return ctx.dag(t); };
    auto L = [&](const QTensor& t) { return ctx.L(t); };
    auto R = [&](const QTensor& t) { return ctx.R(t); };

    const QTensor A3d = dag(A3), B3d = dag(B3);
    const QTensor& C6 = ctx.keep(nm.C6, mul(C4, L(A3)));
    const QTensor& D6 = ctx.keep(nm.D6, mul(R(B3), D4));
    const QTensor& C7 = ctx.keep(nm.C7, mul(C5, L(A3)));
    const QTensor& D7 = ctx.keep(nm.D7, mul(R(B3), D5));
    const QTensor& G = ctx.keep("G", Pt - mul(C4, A3d, E3, D4) - mul(C4, L(A3), E4, B3d, D4));
    const QTensor& F = ctx.keep("F", Qt - mul(C5, A3d, E3, D5) - mul(C5, L(A3), E4, B3d, D5));

    const QTensor& M1 = ctx.keep("M1", mul(R(A4), C6));
    const QTensor& N1 = ctx.keep("N1", mul(D6, L(B4)));
    const QTensor& S1 = ctx.keep("S1", mul(C6, L(M1)));
    const QTensor& M2 = ctx.keep("M2", mul(R(A5), C7));
    const QTensor& N2 = ctx.keep("N2", mul(D7, L(B5)));
    const QTensor& S2 = ctx.keep("S2", mul(C7, L(M2)));

    const QTensor& A11 = ctx.keep("A11", row_block(mul(L(M1), L(S1)), mul(L(M2), L(S2))));
    const QTensor& B11 = ctx.keep("B11", col_block(R(D6), R(D7)));
    const QTensor& E11 = ctx.keep("E11", mul(dag(M2), F, dag(D7)) + mul(dag(S2), S2, dag(C7), F, dag(N2)) -
                                             mul(dag(M1), G, dag(D6)) - mul(dag(S1), S1, dag(C6), G, dag(N1)));

    const QTensor& A = ctx.keep("A", mul(R(A11), L(M1)));
    const QTensor& B = ctx.keep("B", mul(R(N1), L(B11)));
    const QTensor& C = ctx.keep("C", mul(R(A11), L(M2)));
    const QTensor& D = ctx.keep("D", mul(R(N2), L(B11)));
    const QTensor& E = ctx.keep("E", mul(R(A11), E11, L(B11)));
    const QTensor& M = ctx.keep("M", mul(R(A), C));
    const QTensor& N = ctx.keep("N", mul(D, L(B)));
    const QTensor& S = ctx.keep("S", mul(C, L(M)));
    const QTensor Ad = dag(A), Bd = dag(B), Cd = dag(C), Dd = dag(D), Md = dag(M), Nd = dag(N), Sd = dag(S);

    const QTensor A4d = dag(A4), B4d = dag(B4), A5d = dag(A5), B5d = dag(B5);
    const QTensor& A22 = ctx.keep("A22", row_block(L(A1), L(A4)));
    const QTensor& B22 = ctx.keep("B22", col_block(R(B1), R(B4)));
    const QTensor& C22 = ctx.keep("C22", mul(A4d, S1));
    const QTensor& D22 = ctx.keep("D22", mul(R(N1), D6, B4d));
    const QTensor& E22 = ctx.keep("E22", mul(A4d, G, B4d) - mul(dag(A1), E1, dag(B1)) -
                                             mul(A4d, S1, dag(C6), G, dag(N1), D6, B4d) - mul(A4d, C6, dag(M1), G, B4d));
    const QTensor& A33 = ctx.keep("A33", mul(R(A22), C22));
    const QTensor& B33 = ctx.keep("B33", mul(D22, L(B22)));
    const QTensor& E33 = ctx.keep("E33", mul(R(A22), E22, L(B22)));

    const QTensor& A44 = ctx.keep("A44", row_block(L(A2), L(A5)));
    const QTensor& B44 = ctx.keep("B44", col_block(R(B2), R(B5)));
    const QTensor& C44 = ctx.keep("C44", mul(A5d, S2));
    const QTensor& D44 = ctx.keep("D44", mul(R(N2), D7, B5d));
    const QTensor& E44 = ctx.keep("E44", mul(A5d, F, B5d) - mul(dag(A2), E2, dag(B2)) -
                                             mul(A5d, S2, dag(C7), F, dag(N2), D7, B5d) - mul(A5d, C7, dag(M2), F, B5d));
    const QTensor& A55 = ctx.keep("A55", mul(R(A44), C44));
    const QTensor& B55 = ctx.keep("B55", mul(D44, L(B44)));
    const QTensor& E55 = ctx.keep("E55", mul(R(A44), E44, L(B44)));

    const QTensor& A66 = ctx.keep("A66", row_block(L(A), L(A33)));
    const QTensor& B66 = ctx.keep("B66", col_block(R(B), R(B33)));
    const QTensor& C66 = ctx.keep("C66", mul(Ad, S));
    const QTensor& D66 = ctx.keep("D66", mul(R(N), D, Bd));
    const QTensor& E66 = ctx.keep("E66", mul(dag(A33), E33, dag(B33)) - mul(Ad, E, Bd) +
                                             mul(Ad, S, Cd, E, Nd, D, Bd) + mul(Ad, C, Md, E, Bd));
    const QTensor& A77 = ctx.keep("A77", mul(R(A66), C66));
    const QTensor& B77 = ctx.keep("B77", mul(D66, L(B66)));
    const QTensor& E77 = ctx.keep("E77", mul(R(A66), E66, L(B66)));

    const QTensor& A88 = ctx.keep("A88", row_block(mul(L(M), L(S)), L(A55)));
    const QTensor& B88 = ctx.keep("B88", col_block(R(D), R(B55)));
    const QTensor& C88 = ctx.keep("C88", L(M));
    const QTensor& D88 = ctx.keep("D88", R(N));
    // T2 has to satisfy A55 T2 B55 = -E55, which is why all three terms
    // carry the same sign here.
    const QTensor& E88 = ctx.keep("E88", mul(dag(A55), E55, dag(B55)) + mul(Md, E, Dd) + mul(Sd, S, Cd, E, Nd));
    const QTensor& A99 = ctx.keep("A99", mul(R(A88), C88));
    const QTensor& B99 = ctx.keep("B99", mul(D88, L(B88)));
    const QTensor& E99 = ctx.keep("E99", mul(R(A88), E88, L(B88)));

    const QTensor& At = ctx.keep("Ã", row_block(L(A77), -L(A99)));
    const QTensor& Bt = ctx.keep("B̃", col_block(R(B77), -R(B99)));
    const QTensor& Et = ctx.keep("Ẽ", mul(dag(A77), E77, dag(B77)) - mul(dag(A99), E99, dag(B99)));

    ctx.check(Rn("A3") + " E3 = 0", mul(R(A3), E3), A3, E3);
    ctx.check("E4 " + Ln("B3") + " = 0", mul(E4, L(B3)), E4, B3);
    ctx.check("A3 E4 = E3 B3", mul(A3, E4) - mul(E3, B3), A3, E4, E3, B3);
    ctx.check(Rn(nm.A4) + " G " + Ln(nm.D6) + " = 0", mul(R(A4), G, L(D6)), A4, G, D6);
    ctx.check(Rn(nm.C6) + " G " + Ln(nm.B4) + " = 0", mul(R(C6), G, L(B4)), C6, G, B4);
    ctx.check(Rn("M1") + " " + Rn(nm.A4) + " G = 0", mul(R(M1), R(A4), G), M1, A4, G);
    ctx.check("G " + Ln(nm.B4) + " " + Ln("N1") + " = 0", mul(G, L(B4), L(N1)), G, B4, N1);
    ctx.check(Rn(nm.A5) + " F " + Ln(nm.D7) + " = 0", mul(R(A5), F, L(D7)), A5, F, D7);
    ctx.check(Rn(nm.C7) + " F " + Ln(nm.B5) + " = 0", mul(R(C7), F, L(B5)), C7, F, B5);
    ctx.check(Rn("M2") + " " + Rn(nm.A5) + " F = 0", mul(R(M2), R(A5), F), M2, A5, F);
    ctx.check("F " + Ln(nm.B5) + " " + Ln("N2") + " = 0", mul(F, L(B5), L(N2)), F, B5, N2);
    ctx.check("R_{M} R_{A} E = 0", mul(R(M), R(A), E), M, A, E);
    ctx.check("R_{A} E L_{D} = 0", mul(R(A), E, L(D)), A, E, D);
    ctx.check("E L_{B} L_{N} = 0", mul(E, L(B), L(N)), E, B, N);
    ctx.check("R_{C} E L_{B} = 0", mul(R(C), E, L(B)), C, E, B);
    ctx.check("R_{A1} E1 = 0", mul(R(A1), E1), A1, E1);
    ctx.check("E1 L_{B1} = 0", mul(E1, L(B1)), E1, B1);
    ctx.check("R_{A2} E2 = 0", mul(R(A2), E2), A2, E2);
    ctx.check("E2 L_{B2} = 0", mul(E2, L(B2)), E2, B2);
    ctx.check("R_{A33} E33 = 0", mul(R(A33), E33), A33, E33);
    ctx.check("E33 L_{B33} = 0", mul(E33, L(B33)), E33, B33);
    ctx.check("R_{A55} E55 = 0", mul(R(A55), E55), A55, E55);
    ctx.check("E55 L_{B55} = 0", mul(E55, L(B55)), E55, B55);
    ctx.check("R_{A77} E77 = 0", mul(R(A77), E77), A77, E77);
    ctx.check("E77 L_{B77} = 0", mul(E77, L(B77)), E77, B77);
    ctx.check("R_{A99} E99 = 0", mul(R(A99), E99), A99, E99);
    ctx.check("E99 L_{B99} = 0", mul(E99, L(B99)), E99, B99);
    ctx.check("R_{Ã} Ẽ L_{B̃} = 0", mul(R(At), Et, L(Bt)), At, Et, Bt);

    if (!ctx.solving() || !ctx.report().consistent) return std::nullopt;

    // W4 from the two constraints A77 W4 B77 = E77 and A99 W4 B99 = E99.
    const QTensor K1 = ctx.param("K1", At.right(), Et.right());
    const QTensor K2 = ctx.param("K2", At.left(), Bt.left());
    const QTensor K3 = ctx.param("K3", Et.left(), Bt.left());
    const QTensor Atd = dag(At), Btd = dag(Bt);
    const QTensor& Q1 = ctx.keep("Q1", take_first_rows(mul(Atd, Et) - mul(Atd, K2, Bt) + mul(L(At), K1),
                                                       A77.right(), A99.right()));
    const QTensor& Q2 = ctx.keep("Q2", take_first_cols(mul(R(At), Et, Btd) + mul(At, Atd, K2) + mul(K3, R(Bt)),
                                                       B77.left(), B99.left()));
    const QTensor& W4 = ctx.keep("W4", mul(dag(A77), E77, dag(B77)) - mul(L(A77), Q1) - mul(Q2, R(B77)));

    auto [W5, W6] = block_solution(ctx, A66, B66, E66 - mul(C66, W4, D66), A.right(), A33.right(), B.left(),
                                   B33.left(), {"H31", "H32", "H33"});
    auto [W7n, W8n] = block_solution(ctx, A88, B88, E88 - mul(C88, W4, D88), M.right(), A55.right(), D.left(),
                                     B55.left(), {"H41", "H42", "H43"});
    ctx.keep("W5", W5);
    ctx.keep("W6", W6);
    const QTensor& W7 = ctx.keep("W7", -W7n);
    const QTensor& W8 = ctx.keep("W8", -W8n);

    const QTensor& V2 = ctx.keep("V2", mul(Ad, E, Bd) - mul(Ad, C, Md, E, Bd) - mul(Ad, S, Cd, E, Nd, D, Bd) +
                                           mul(Ad, S, W4, R(N), D, Bd) + mul(L(A), W5) + mul(W6, R(B)));
    // The pair structure ties W4 into T2 with the opposite sign to V2.
    const QTensor& T2 = ctx.keep("T2", mul(Md, E, Dd) + mul(Sd, S, Cd, E, Nd) + mul(L(M), L(S), W7) -
                                           mul(L(M), W4, R(N)) + mul(W8, R(D)));

    const QTensor Ebar = E11 - mul(L(M1), V2, R(N1)) - mul(L(M2), T2, R(N2));
    const QTensor W1 = ctx.param("W1", A11.right(), B11.left());
    const QTensor W2 = ctx.param("W2", A11.right(), Ebar.right());
    const QTensor W3 = ctx.param("W3", Ebar.left(), B11.left());
    const QTensor& V1 = ctx.keep("V1", take_first_rows(mul(dag(A11), Ebar) + mul(W1, B11) + mul(L(A11), W2),
                                                       M1.right(), M2.right()));
    const QTensor& V3 = ctx.keep("V3", take_first_cols(mul(R(A11), Ebar, dag(B11)) - mul(A11, W1) - mul(W3, R(B11)),
                                                       D6.left(), D7.left()));

    const QTensor& Wz = ctx.keep("U", mul(dag(M1), G, dag(D6)) + mul(dag(S1), S1, dag(C6), G, dag(N1)) +
                                          mul(L(M1), L(S1), V1) + mul(L(M1), V2, R(N1)) + mul(V3, R(D6)));
    QTensor Z = mul(A3d, E3) + mul(L(A3), E4, B3d) + mul(L(A3), Wz, R(B3));

    auto [U1, U2] = block_solution(ctx, A22, B22, E22 - mul(C22, V2, D22), A1.right(), A4.right(), B1.left(),
                                   B4.left(), {"H11", "H12", "H13"});
    auto [U3, U4] = block_solution(ctx, A44, B44, E44 + mul(C44, T2, D44), A2.right(), A5.right(), B2.left(),
                                   B5.left(), {"H21", "H22", "H23"});
    ctx.keep("U1", U1);
    ctx.keep("U2", U2);
    ctx.keep("U3", U3);
    ctx.keep("U4", U4);
    QTensor X = mul(dag(A1), E1, dag(B1)) + mul(L(A1), U1) + mul(U2, R(B1));
    QTensor Y = mul(dag(A2), E2, dag(B2)) + mul(L(A2), U3) + mul(U4, R(B2));
    return CoreSolution{std::move(X), std::move(Y), std::move(Z)};
}

} // namespace qts::detail
