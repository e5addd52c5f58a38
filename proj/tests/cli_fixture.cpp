// Writes problem files for the command-line tests into the given directory.
#include "qts/io.hpp"
#include "support.hpp"

#include <filesystem>
#include <iostream>

using namespace qts;

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: cli_fixture <dir>\n";
        return 1;
    }
    const std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);
    testing::Rng rng(4242);

    const auto p = testing::planted(rng, SystemKind::main15);
    io::write_json(dir / "planted.json", io::problem_to_json(p.instance));

    // A1 is rank deficient, so a generic change to E1 breaks R_A1 E1 = 0.
    ProblemInstance perturbed = p.instance;
    QTensor& e1 = perturbed.coefficients.at("E1");
    const QTensor noise = testing::random_tensor(rng, e1.left(), e1.right());
    e1 = e1 + scale(noise, 1.0 / frob_norm(noise));
    io::write_json(dir / "perturbed.json", io::problem_to_json(perturbed));

    io::Json bad = io::problem_to_json(p.instance);
    auto& entries = bad["tensors"]["E9"]["entries"];
    entries.erase(entries.begin());
    io::write_json(dir / "malformed.json", bad);

    TensorMap params;
    const Shape s = testing::planted_shape();
    params.emplace("T41", testing::random_tensor(rng, s, s));
    params.emplace("J51", testing::random_tensor(rng, s, s));
    io::write_json(dir / "params.json", io::tensors_to_json(params));

    TensorMap zeros = p.plant;
    for (auto& [name, t] : zeros) t = zero(t.left(), t.right());
    io::write_json(dir / "zero_solution.json", io::solution_to_json({SystemKind::main15, zeros, {}}));
    return 0;
}
