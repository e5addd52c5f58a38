#include "support.hpp"

#include "qts/equations.hpp"

#include <algorithm>
#include <vector>

namespace qts::testing {

QTensor random_tensor(Rng& rng, const Shape& left, const Shape& right) {
    std::normal_distribution<double> n(0.0, 1.0);
    QTensor t(left, right);
    for (Quaternion& q : t.data()) q = Quaternion(n(rng), n(rng), n(rng), n(rng));
    return t;
}

QTensor random_low_rank(Rng& rng, const Shape& left, const Shape& right, std::size_t rank) {
    const Shape inner{rank};
    return random_tensor(rng, left, inner) * random_tensor(rng, inner, right);
}

Shape random_shape(Rng& rng, std::size_t max_order, std::size_t max_dim) {
    std::uniform_int_distribution<std::size_t> order(1, max_order), dim(1, max_dim);
    std::vector<std::size_t> dims(order(rng));
    for (auto& d : dims) d = dim(rng);
    return Shape(dims);
}

double rel_diff(const QTensor& a, const QTensor& b) { return frob_norm(a - b) / (1.0 + frob_norm(b)); }

std::array<double, 4> penrose_errors(const QTensor& d, const QTensor& p) {
    const QTensor dp = d * p, pd = p * d;
    return {rel_diff(dp * d, d), rel_diff(pd * p, p), rel_diff(conj_transpose(dp), dp),
            rel_diff(conj_transpose(pd), pd)};
}

QTensor random_eta_hermitian(Rng& rng, const Shape& shape, EtaAxis eta) {
    const QTensor a = random_tensor(rng, shape, shape);
    return scale(a + eta_conj_transpose(a, eta), 0.5);
}

Shape planted_shape() { return Shape{2, 2}; }

namespace {

QTensor evaluate(const Equation& eq, const ProblemInstance& inst, const TensorMap& plant) {
    auto factor = [&](const Factor& f) {
        const QTensor& t = inst.get(f.name);
        return f.eta ? eta_conj_transpose(t, *inst.eta) : t;
    };
    QTensor sum;
    bool first = true;
    for (const Term& t : eq.terms) {
        const QTensor& u = plant.at(t.unknown);
        QTensor term = t.unknown_eta ? eta_conj_transpose(u, *inst.eta) : u;
        for (auto it = t.left.rbegin(); it != t.left.rend(); ++it) term = factor(*it) * term;
        for (const Factor& f : t.right) term = term * factor(f);
        sum = first ? term : sum + term;
        first = false;
    }
    return sum;
}

} // namespace

Planted planted(Rng& rng, SystemKind kind, EtaAxis eta) {
    const Shape s = planted_shape();
    std::uniform_int_distribution<std::size_t> rank(1, 3);
    Planted p;
    p.instance.kind = kind;
    if (kind == SystemKind::eta17) p.instance.eta = eta;

    std::vector<std::string> rhs_names;
    for (const Equation& eq : equations(kind)) rhs_names.push_back(eq.rhs);
    for (const std::string& name : coefficient_names(kind)) {
        if (std::find(rhs_names.begin(), rhs_names.end(), name) == rhs_names.end()) {
            p.instance.coefficients.emplace(name, random_low_rank(rng, s, s, rank(rng)));
        }
    }
    for (const std::string& name : unknown_names(kind)) {
        const bool sym = kind == SystemKind::eta17 && (name == "X3" || name == "Y3" || name == "W");
        p.plant.emplace(name, sym ? random_eta_hermitian(rng, s, eta) : random_tensor(rng, s, s));
    }
    for (const Equation& eq : equations(kind)) {
        p.instance.coefficients.insert_or_assign(eq.rhs, evaluate(eq, p.instance, p.plant));
    }
    // eta17 carries no separate equation for W B3 = E4; nothing else to add.
    return p;
}

void perturb(Rng& rng, ProblemInstance& inst, double size) {
    std::vector<std::string> rhs;
    for (const Equation& eq : equations(inst.kind)) rhs.push_back(eq.rhs);
    std::uniform_int_distribution<std::size_t> pick(0, rhs.size() - 1);
    QTensor& e = inst.coefficients.at(rhs[pick(rng)]);
    QTensor noise = random_tensor(rng, e.left(), e.right());
    if (inst.kind == SystemKind::eta17) noise = scale(noise + eta_conj_transpose(noise, *inst.eta), 0.5);
    e = e + scale(noise, size / frob_norm(noise));
}

ParamGenerator random_params(Rng& rng) {
    return [&rng](const std::string&, const Shape& left, const Shape& right) {
        return random_tensor(rng, left, right);
    };
}

} // namespace qts::testing
