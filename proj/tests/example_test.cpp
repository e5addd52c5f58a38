// Checks on the built-in example data set. The listed solution does not
// satisfy every equation of the listed data, so several of these cases fail;
// they are kept in their own binary so the unit suites stay meaningful.
#include "qts/example.hpp"

#include "doctest.h"
#include "qts/solvers.hpp"
#include "qts/verify.hpp"

#include <string>

using namespace qts;

namespace {

const ProblemInstance& problem() {
    static const ProblemInstance p = example_problem();
    return p;
}

const TensorMap& listed() {
    static const TensorMap s = example_solution();
    return s;
}

const QTensor& c(const char* name) { return problem().get(name); }
const QTensor& u(const char* name) { return listed().at(name); }

} // namespace

TEST_CASE("example tensors are 2x2x2x2 with integer entries") {
    for (const auto* map : {&problem().coefficients, &listed()}) {
        for (const auto& [name, t] : *map) {
            CAPTURE(name);
            CHECK(t.left() == Shape{2, 2});
            CHECK(t.right() == Shape{2, 2});
        }
    }
    CHECK(problem().coefficients.size() == 36);
    CHECK(listed().size() == 7);
}

TEST_CASE("listed solution reproduces E5, E7 and E8") {
    CHECK(c("A4") * u("X1") == c("E5"));
    CHECK(c("A5") * u("Y1") == c("E7"));
    CHECK(u("Y2") * c("B5") == c("E8"));
}

TEST_CASE("A3, B3, E3, E4 are compatible") { CHECK(c("A3") * c("E4") == c("E3") * c("B3")); }

TEST_CASE("listed solution reproduces E9 and E10") {
    const QTensor e9 = c("A6") * u("X1") * c("B6") + c("A7") * u("X2") * c("B7") +
                       c("A7") * (c("C3") * u("X3") * c("D3") + c("C4") * u("W") * c("D4")) * c("B6");
    const QTensor e10 = c("A8") * u("Y1") * c("B8") + c("A9") * u("Y2") * c("B9") +
                        c("A9") * (c("H3") * u("Y3") * c("J3") + c("H4") * u("W") * c("J4")) * c("B8");
    CHECK(e9 == c("E9"));
    CHECK(e10 == c("E10"));
}

TEST_CASE("listed solution satisfies every equation") {
    const ResidualReport r = residual(problem(), listed());
    for (const EquationResidual& e : r.equations) {
        CAPTURE(e.equation);
        CHECK(e.relative <= 1e-12);
    }
}

TEST_CASE("example passes every solvability condition") {
    const SolveReport report = audit_conditions(problem());
    for (const Condition& cond : report.conditions) {
        CAPTURE(cond.name);
        CHECK(cond.pass);
    }
}

TEST_CASE("solver agrees with the least-squares oracle on the example") {
    const OracleResult o = oracle_consistency(problem());
    CHECK(o.consistent == audit_conditions(problem()).consistent);
}

TEST_CASE("solver solution of the example verifies") {
    const SolveResult r = solve_main15(problem());
    REQUIRE(r.solution.has_value());
    CHECK(residual(problem(), r.solution->unknowns).max_relative <= 1e-8);
}
