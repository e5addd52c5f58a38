#include "qts/errors.hpp"
#include "qts/example.hpp"
#include "qts/io.hpp"
#include "qts/solvers.hpp"
#include "qts/verify.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace qts;
namespace fs = std::filesystem;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInconsistent = 2;

struct Common {
    double tol = default_tolerance();
    std::optional<double> rank_tol;

    SolveOptions options() const {
        SolveOptions o;
        o.tol = tol;
        if (rank_tol) o.pinv.rank_tol_factor = *rank_tol;
        return o;
    }
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--tol", c.tol, "Pass threshold for conditions and residuals (default 1e-8 or $QTSOLVE_TOL)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--rank-tol", c.rank_tol, "Relative singular-value cutoff factor for pseudoinverses")
        ->check(CLI::PositiveNumber);
}

ProblemInstance load_problem(const std::string& path) { return io::problem_from_json(io::read_json(path)); }

int cmd_check(const std::string& path, const Common& c) {
    const ProblemInstance inst = load_problem(path);
    const SolveReport report = audit_conditions(inst, c.options());
    std::cout << io::dump(io::report_to_json(report));
    return report.consistent ? kOk : kInconsistent;
}

int cmd_solve(const std::string& path, const Common& c, const std::string& params, const std::string& out) {
    const ProblemInstance inst = load_problem(path);
    FreeParams supplied;
    if (params != "zero") supplied = io::tensors_from_json(io::read_json(params));
    const SolveResult result = solve(inst, supplied, c.options());
    if (!result.solution) {
        std::cout << io::dump(io::report_to_json(result.report));
        return kInconsistent;
    }
    const io::Json sol = io::solution_to_json({inst.kind, result.solution->unknowns, result.solution->params_used});
    if (out.empty()) {
        std::cout << io::dump(sol);
    } else {
        io::write_json(out, sol);
        std::cout << io::dump(io::report_to_json(result.report));
    }
    return kOk;
}

int cmd_verify(const std::string& problem, const std::string& solution, const Common& c) {
    const ProblemInstance inst = load_problem(problem);
    const io::SolutionFile sol = io::solution_from_json(io::read_json(solution));
    if (sol.kind != inst.kind) {
        throw InputError("solution is for system " + std::string(to_string(sol.kind)) + " but the problem is " +
                         std::string(to_string(inst.kind)));
    }
    const ResidualReport report = residual(inst, sol.unknowns);
    std::cout << io::dump(io::residual_to_json(report));
    return report.max_relative <= c.tol ? kOk : kInconsistent;
}

int cmd_export(const fs::path& dir) {
    fs::create_directories(dir);
    const ProblemInstance inst = example_problem();
    io::write_json(dir / "problem.json", io::problem_to_json(inst));
    io::write_json(dir / "solution.json", io::solution_to_json({inst.kind, example_solution(), {}}));
    std::cout << "wrote " << (dir / "problem.json").string() << " and " << (dir / "solution.json").string() << "\n";
    return kOk;
}

void row(const char* step, bool pass, const std::string& detail) {
    std::printf("%-34s %-5s %s\n", step, pass ? "PASS" : "FAIL", detail.c_str());
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

int cmd_run(const Common& c) {
    const ProblemInstance inst = example_problem();
    const SolveOptions opts = c.options();
    bool ok = true;

    const SolveReport report = audit_conditions(inst, opts);
    std::size_t passed = 0;
    for (const Condition& cond : report.conditions) passed += cond.pass ? 1 : 0;
    row("solvability conditions", report.consistent,
        std::to_string(passed) + "/" + std::to_string(report.conditions.size()) + " pass");
    for (const Condition& cond : report.conditions) {
        if (!cond.pass) std::printf("    failing: %s  (norm %s)\n", cond.name.c_str(), sci(cond.lhs_norm).c_str());
    }
    ok = ok && report.consistent;

    const ResidualReport listed = residual(inst, example_solution());
    const bool listed_ok = listed.max_relative <= 1e-12;
    row("listed solution residual", listed_ok, "max relative " + sci(listed.max_relative));
    for (const EquationResidual& r : listed.equations) {
        if (r.relative > 1e-12) std::printf("    %s  relative %s\n", r.equation.c_str(), sci(r.relative).c_str());
    }
    ok = ok && listed_ok;

    const SolveResult result = solve(inst, {}, opts);
    if (result.solution) {
        const ResidualReport own = residual(inst, result.solution->unknowns);
        const bool own_ok = own.max_relative <= opts.tol;
        row("solver solution residual", own_ok, "max relative " + sci(own.max_relative));
        ok = ok && own_ok;
    } else {
        row("solver solution residual", false, "no solution: conditions fail");
        ok = false;
    }

    const OracleResult oracle = oracle_consistency(inst);
    row("least-squares oracle", oracle.consistent, "min relative residual " + sci(oracle.min_residual));
    ok = ok && oracle.consistent;

    std::printf("%s\n", ok ? "example: all checks pass" : "example: some checks fail");
    return ok ? kOk : kInconsistent;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solvability checks and general solutions for quaternion tensor equations"};
    app.require_subcommand(1);

    Common common;
    std::string problem, solution, params = "zero", out, export_dir;
    bool run = false;

    auto* check = app.add_subcommand("check", "Evaluate the solvability conditions of a problem file");
    check->add_option("problem", problem, "Problem JSON file")->required();
    add_common(check, common);

    auto* solve_cmd = app.add_subcommand("solve", "Check a problem and write its general solution");
    solve_cmd->add_option("problem", problem, "Problem JSON file")->required();
    solve_cmd->add_option("--params", params, "Free-parameter JSON file, or 'zero'");
    solve_cmd->add_option("--out", out, "Write the solution here instead of stdout");
    add_common(solve_cmd, common);

    auto* verify = app.add_subcommand("verify", "Residuals of a solution file against a problem file");
    verify->add_option("problem", problem, "Problem JSON file")->required();
    verify->add_option("solution", solution, "Solution JSON file")->required();
    add_common(verify, common);

    auto* example = app.add_subcommand("example", "Built-in 2x2x2x2 example data set");
    auto* exp = example->add_option("--export", export_dir, "Write problem.json and solution.json to this directory");
    auto* runf = example->add_flag("--run", run, "Check, solve and verify the example");
    exp->excludes(runf);
    example->require_option(1);
    add_common(example, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*check) return cmd_check(problem, common);
        if (*solve_cmd) return cmd_solve(problem, common, params, out);
        if (*verify) return cmd_verify(problem, solution, common);
        if (*example) return run ? cmd_run(common) : cmd_export(export_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
