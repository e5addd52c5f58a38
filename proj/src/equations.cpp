#include "qts/equations.hpp"

#include "qts/errors.hpp"

#include <algorithm>
#include <set>

namespace qts {

namespace {

Factor f(std::string name) { return {std::move(name), false}; }
Factor fe(std::string name) { return {std::move(name), true}; }

std::vector<Equation> make_pair11() {
    return {{"A X B + C Y D = E", {{{f("A")}, "X", {f("B")}}, {{f("C")}, "Y", {f("D")}}}, "E"}};
}

std::vector<Equation> make_eq31() {
    return {{"A1 X1 B1 + A2 X2 B2 + A2 (C3 X3 D3 + C4 W D4) B1 = E1",
             {{{f("A1")}, "X1", {f("B1")}},
              {{f("A2")}, "X2", {f("B2")}},
              {{f("A2"), f("C3")}, "X3", {f("D3"), f("B1")}},
              {{f("A2"), f("C4")}, "W", {f("D4"), f("B1")}}},
             "E1"}};
}

std::vector<Equation> make_coupled14() {
    return {{"A1 X B1 = E1", {{{f("A1")}, "X", {f("B1")}}}, "E1"},
            {"A2 Y B2 = E2", {{{f("A2")}, "Y", {f("B2")}}}, "E2"},
            {"A3 Z = E3", {{{f("A3")}, "Z", {}}}, "E3"},
            {"Z B3 = E4", {{{}, "Z", {f("B3")}}}, "E4"},
            {"A4 X B4 + C4 Z D4 = P", {{{f("A4")}, "X", {f("B4")}}, {{f("C4")}, "Z", {f("D4")}}}, "P"},
            {"A5 Y B5 + C5 Z D5 = Q", {{{f("A5")}, "Y", {f("B5")}}, {{f("C5")}, "Z", {f("D5")}}}, "Q"}};
}

std::vector<Equation> make_main15() {
    return {{"A1 X3 B1 = E1", {{{f("A1")}, "X3", {f("B1")}}}, "E1"},
            {"A2 Y3 B2 = E2", {{{f("A2")}, "Y3", {f("B2")}}}, "E2"},
            {"A4 X1 = E5", {{{f("A4")}, "X1", {}}}, "E5"},
            {"X2 B4 = E6", {{{}, "X2", {f("B4")}}}, "E6"},
            {"A5 Y1 = E7", {{{f("A5")}, "Y1", {}}}, "E7"},
            {"Y2 B5 = E8", {{{}, "Y2", {f("B5")}}}, "E8"},
            {"A3 W = E3", {{{f("A3")}, "W", {}}}, "E3"},
            {"W B3 = E4", {{{}, "W", {f("B3")}}}, "E4"},
            {"A6 X1 B6 + A7 X2 B7 + A7 (C3 X3 D3 + C4 W D4) B6 = E9",
             {{{f("A6")}, "X1", {f("B6")}},
              {{f("A7")}, "X2", {f("B7")}},
              {{f("A7"), f("C3")}, "X3", {f("D3"), f("B6")}},
              {{f("A7"), f("C4")}, "W", {f("D4"), f("B6")}}},
             "E9"},
            {"A8 Y1 B8 + A9 Y2 B9 + A9 (H3 Y3 J3 + H4 W J4) B8 = E10",
             {{{f("A8")}, "Y1", {f("B8")}},
              {{f("A9")}, "Y2", {f("B9")}},
              {{f("A9"), f("H3")}, "Y3", {f("J3"), f("B8")}},
              {{f("A9"), f("H4")}, "W", {f("J4"), f("B8")}}},
             "E10"}};
}

std::vector<Equation> make_sys16() {
    return {{"A1 X3 B1 = E1", {{{f("A1")}, "X3", {f("B1")}}}, "E1"},
            {"A2 Y3 B2 = E2", {{{f("A2")}, "Y3", {f("B2")}}}, "E2"},
            {"A3 W = E3", {{{f("A3")}, "W", {}}}, "E3"},
            {"W B3 = E4", {{{}, "W", {f("B3")}}}, "E4"},
            {"A6 X1 + X2 B7 + C3 X3 D3 + C4 W D4 = E9",
             {{{f("A6")}, "X1", {}},
              {{}, "X2", {f("B7")}},
              {{f("C3")}, "X3", {f("D3")}},
              {{f("C4")}, "W", {f("D4")}}},
             "E9"},
            {"A8 Y1 + Y2 B9 + H3 Y3 J3 + H4 W J4 = E10",
             {{{f("A8")}, "Y1", {}},
              {{}, "Y2", {f("B9")}},
              {{f("H3")}, "Y3", {f("J3")}},
              {{f("H4")}, "W", {f("J4")}}},
             "E10"}};
}

std::vector<Equation> make_eta17() {
    return {{"A1 X3 A1^η* = E1", {{{f("A1")}, "X3", {fe("A1")}}}, "E1"},
            {"A2 Y3 A2^η* = E2", {{{f("A2")}, "Y3", {fe("A2")}}}, "E2"},
            {"A3 W = E3", {{{f("A3")}, "W", {}}}, "E3"},
            {"A6 X1 + (A6 X1)^η* + C3 X3 C3^η* + C4 W C4^η* = E9",
             {{{f("A6")}, "X1", {}},
              {{}, "X1", {fe("A6")}, true},
              {{f("C3")}, "X3", {fe("C3")}},
              {{f("C4")}, "W", {fe("C4")}}},
             "E9"},
            {"A8 Y1 + (A8 Y1)^η* + H3 Y3 H3^η* + H4 W H4^η* = E10",
             {{{f("A8")}, "Y1", {}},
              {{}, "Y1", {fe("A8")}, true},
              {{f("H3")}, "Y3", {fe("H3")}},
              {{f("H4")}, "W", {fe("H4")}}},
             "E10"}};
}

std::string shape_str(const TensorShape& s) { return s.left.str() + "x" + s.right.str(); }

} // namespace

const std::vector<Equation>& equations(SystemKind kind) {
    static const std::vector<Equation> pair11 = make_pair11(), eq31 = make_eq31(),
                                       coupled14 = make_coupled14(), main15 = make_main15(),
                                       sys16 = make_sys16(), eta17 = make_eta17();
    switch (kind) {
    case SystemKind::pair11: return pair11;
    case SystemKind::eq31: return eq31;
    case SystemKind::coupled14: return coupled14;
    case SystemKind::main15: return main15;
    case SystemKind::sys16: return sys16;
    case SystemKind::eta17: return eta17;
    }
    throw InputError("unknown system kind");
}

std::vector<std::string> unknown_names(SystemKind kind) {
    switch (kind) {
    case SystemKind::pair11: return {"X", "Y"};
    case SystemKind::eq31: return {"X1", "X2", "X3", "W"};
    case SystemKind::coupled14: return {"X", "Y", "Z"};
    case SystemKind::main15:
    case SystemKind::sys16: return {"X1", "X2", "X3", "Y1", "Y2", "Y3", "W"};
    case SystemKind::eta17: return {"X1", "X3", "Y1", "Y3", "W"};
    }
    throw InputError("unknown system kind");
}

std::vector<std::string> coefficient_names(SystemKind kind) {
    std::vector<std::string> names;
    std::set<std::string> seen;
    auto add = [&](const std::string& n) {
        if (seen.insert(n).second) names.push_back(n);
    };
    for (const Equation& eq : equations(kind)) {
        for (const Term& t : eq.terms) {
            for (const Factor& fa : t.left) add(fa.name);
            for (const Factor& fa : t.right) add(fa.name);
        }
        add(eq.rhs);
    }
    return names;
}

std::map<std::string, TensorShape> validate_instance(const ProblemInstance& inst) {
    if (inst.kind == SystemKind::eta17 && !inst.eta) throw InputError("eta17 problems need an eta axis");
    for (const std::string& name : coefficient_names(inst.kind)) {
        if (!inst.coefficients.count(name)) {
            throw InputError(std::string("missing tensor '") + name + "' required by system " +
                             std::string(to_string(inst.kind)));
        }
    }
    auto shape_of = [&](const Factor& fa) {
        const QTensor& t = inst.get(fa.name);
        return fa.eta ? TensorShape{t.right(), t.left()} : TensorShape{t.left(), t.right()};
    };
    // Chains of coefficients must be conformable among themselves.
    auto chain = [&](const std::vector<Factor>& fs, const std::string& where) -> std::optional<TensorShape> {
        if (fs.empty()) return std::nullopt;
        TensorShape acc = shape_of(fs.front());
        for (std::size_t i = 1; i < fs.size(); ++i) {
            const TensorShape next = shape_of(fs[i]);
            if (acc.right != next.left) {
                throw ShapeMismatch("tensor '" + fs[i].name + "' in " + where + " has left shape " +
                                    next.left.str() + ", expected " + acc.right.str());
            }
            acc.right = next.right;
        }
        return acc;
    };

    std::map<std::string, TensorShape> unknowns;
    // Each term pins down the unknown's left shape from its left chain (or the
    // right-hand side when the chain is empty) and likewise for the right shape.
    for (const Equation& eq : equations(inst.kind)) {
        const QTensor& rhs = inst.get(eq.rhs);
        for (const Term& t : eq.terms) {
            const auto lc = chain(t.left, eq.name);
            const auto rc = chain(t.right, eq.name);
            if (lc && lc->left != rhs.left()) {
                throw ShapeMismatch("tensor '" + t.left.front().name + "' in " + eq.name + " has left shape " +
                                    lc->left.str() + ", expected " + rhs.left().str() + " to match '" +
                                    eq.rhs + "'");
            }
            if (rc && rc->right != rhs.right()) {
                throw ShapeMismatch("tensor '" + t.right.back().name + "' in " + eq.name + " has right shape " +
                                    rc->right.str() + ", expected " + rhs.right().str() + " to match '" +
                                    eq.rhs + "'");
            }
            TensorShape u{lc ? lc->right : rhs.left(), rc ? rc->left : rhs.right()};
            if (t.unknown_eta) std::swap(u.left, u.right);
            auto [it, fresh] = unknowns.emplace(t.unknown, u);
            if (!fresh && (it->second.left != u.left || it->second.right != u.right)) {
                throw ShapeMismatch("equation " + eq.name + " needs unknown " + t.unknown + " of shape " +
                                    shape_str(u) + " but another equation needs " + shape_str(it->second));
            }
        }
    }
    if (inst.kind == SystemKind::eta17) {
        for (const char* name : {"X3", "Y3", "W"}) {
            const TensorShape& s = unknowns.at(name);
            if (s.left != s.right) throw ShapeMismatch(std::string("eta-Hermitian unknown ") + name + " must be square, got " + shape_str(s));
        }
    }
    return unknowns;
}

} // namespace qts
