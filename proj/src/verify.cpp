#include "qts/verify.hpp"

#include "qts/equations.hpp"
#include "qts/errors.hpp"
#include "qts/solvers.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>

namespace qts {

namespace {

QTensor apply_eta(const QTensor& t, bool eta, const ProblemInstance& inst) {
    return eta ? eta_conj_transpose(t, *inst.eta) : t;
}

QTensor chain_product(const std::vector<Factor>& fs, const ProblemInstance& inst) {
    QTensor acc = apply_eta(inst.get(fs.front().name), fs.front().eta, inst);
    for (std::size_t i = 1; i < fs.size(); ++i) acc = acc * apply_eta(inst.get(fs[i].name), fs[i].eta, inst);
    return acc;
}

} // namespace

ResidualReport residual(const ProblemInstance& inst, const TensorMap& unknowns) {
    const auto shapes = validate_instance(inst);
    for (const auto& [name, shape] : shapes) {
        auto it = unknowns.find(name);
        if (it == unknowns.end()) throw InputError("solution is missing unknown '" + name + "'");
        if (it->second.left() != shape.left || it->second.right() != shape.right) {
            throw ShapeMismatch("unknown '" + name + "' has shape " + it->second.left().str() + "x" +
                                it->second.right().str() + ", expected " + shape.left.str() + "x" +
                                shape.right.str());
        }
    }

    ResidualReport report;
    for (const Equation& eq : equations(inst.kind)) {
        const QTensor& rhs = inst.get(eq.rhs);
        QTensor lhs = zero(rhs.left(), rhs.right());
        for (const Term& t : eq.terms) {
            QTensor term = apply_eta(unknowns.at(t.unknown), t.unknown_eta, inst);
            if (!t.left.empty()) term = chain_product(t.left, inst) * term;
            if (!t.right.empty()) term = term * chain_product(t.right, inst);
            lhs = lhs + term;
        }
        EquationResidual r;
        r.equation = eq.name;
        r.absolute = frob_norm(lhs - rhs);
        const double scale = frob_norm(rhs);
        r.relative = scale > 0.0 ? r.absolute / scale : r.absolute;
        report.max_relative = std::max(report.max_relative, r.relative);
        report.equations.push_back(std::move(r));
    }
    return report;
}

SolveReport audit_conditions(const ProblemInstance& inst, const SolveOptions& opts) {
    return check_conditions(inst, opts);
}

// ---------------------------------------------------------------------------
// Oracle. Everything below works on plain arrays of (w, x, y, z) and does not
// call the tensor or linear-algebra layers.

namespace {

using Quad = std::array<double, 4>;
using Mat4 = Eigen::Matrix4d;

// Dense quaternion matrix in row-major order.
struct RawMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Quad> q;
    Quad& at(std::size_t r, std::size_t c) { return q[r * cols + c]; }
    const Quad& at(std::size_t r, std::size_t c) const { return q[r * cols + c]; }
};

Quad hamilton(const Quad& a, const Quad& b) {
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

// vec(q p) = lmat(q) vec(p)
Mat4 lmat(const Quad& q) {
    const auto [w, x, y, z] = q;
    Mat4 m;
    m << w, -x, -y, -z, x, w, -z, y, y, z, w, -x, z, -y, x, w;
    return m;
}

// vec(p q) = rmat(q) vec(p)
Mat4 rmat(const Quad& q) {
    const auto [w, x, y, z] = q;
    Mat4 m;
    m << w, -x, -y, -z, x, w, z, -y, y, -z, w, x, z, y, -x, w;
    return m;
}

Quad unit(EtaAxis eta) {
    switch (eta) {
    case EtaAxis::i: return {0, 1, 0, 0};
    case EtaAxis::j: return {0, 0, 1, 0};
    case EtaAxis::k: return {0, 0, 0, 1};
    }
    return {0, 0, 0, 0};
}

Quad neg(const Quad& a) { return {-a[0], -a[1], -a[2], -a[3]}; }

// vec(-eta conj(p) eta) = eta_mat(eta) vec(p)
Mat4 eta_mat(EtaAxis eta) {
    const Quad e = unit(eta);
    return lmat(neg(e)) * rmat(e) * Eigen::Vector4d(1, -1, -1, -1).asDiagonal();
}

RawMat raw(const QTensor& t) {
    RawMat m{t.rows(), t.cols(), {}};
    m.q.reserve(t.size());
    for (const Quaternion& v : t.data()) m.q.push_back({v.w, v.x, v.y, v.z});
    return m;
}

RawMat raw_eta(const QTensor& t, EtaAxis eta) {
    const Mat4 e = eta_mat(eta);
    RawMat m{t.cols(), t.rows(), std::vector<Quad>(t.size())};
    for (std::size_t r = 0; r < t.rows(); ++r) {
        for (std::size_t c = 0; c < t.cols(); ++c) {
            const Quaternion& v = t(r, c);
            const Eigen::Vector4d out = e * Eigen::Vector4d(v.w, v.x, v.y, v.z);
            m.at(c, r) = {out[0], out[1], out[2], out[3]};
        }
    }
    return m;
}

RawMat raw_mul(const RawMat& a, const RawMat& b) {
    RawMat m{a.rows, b.cols, std::vector<Quad>(a.rows * b.cols, Quad{0, 0, 0, 0})};
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            for (std::size_t j = 0; j < b.cols; ++j) {
                const Quad p = hamilton(a.at(i, k), b.at(k, j));
                Quad& o = m.at(i, j);
                for (int c = 0; c < 4; ++c) o[c] += p[c];
            }
        }
    }
    return m;
}

RawMat raw_identity(std::size_t n) {
    RawMat m{n, n, std::vector<Quad>(n * n, Quad{0, 0, 0, 0})};
    for (std::size_t i = 0; i < n; ++i) m.at(i, i)[0] = 1.0;
    return m;
}

RawMat raw_factor(const Factor& f, const ProblemInstance& inst) {
    return f.eta ? raw_eta(inst.get(f.name), *inst.eta) : raw(inst.get(f.name));
}

RawMat raw_chain(const std::vector<Factor>& fs, const ProblemInstance& inst, std::size_t empty_dim) {
    if (fs.empty()) return raw_identity(empty_dim);
    RawMat acc = raw_factor(fs.front(), inst);
    for (std::size_t i = 1; i < fs.size(); ++i) acc = raw_mul(acc, raw_factor(fs[i], inst));
    return acc;
}

struct UnknownSlot {
    std::size_t offset = 0; // first real column
    std::size_t rows = 0, cols = 0;
};

} // namespace

OracleResult oracle_consistency(const ProblemInstance& inst, const OracleOptions& opts) {
    const auto shapes = validate_instance(inst);

    std::map<std::string, UnknownSlot> slots;
    std::size_t n_cols = 0;
    for (const std::string& name : unknown_names(inst.kind)) {
        const TensorShape& s = shapes.at(name);
        UnknownSlot slot{n_cols, s.left.count(), s.right.count()};
        n_cols += 4 * slot.rows * slot.cols;
        slots.emplace(name, slot);
    }
    if (n_cols > opts.max_unknown_reals) {
        throw SizeCapExceeded("oracle needs " + std::to_string(n_cols) + " unknown reals, cap is " +
                              std::to_string(opts.max_unknown_reals));
    }

    const bool eta_sym = inst.kind == SystemKind::eta17;
    std::size_t n_rows = 0;
    for (const Equation& eq : equations(inst.kind)) n_rows += 4 * inst.get(eq.rhs).size();
    if (eta_sym) {
        for (const char* name : {"X3", "Y3", "W"}) n_rows += 4 * slots.at(name).rows * slots.at(name).cols;
    }

    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n_rows), static_cast<Eigen::Index>(n_cols));
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n_rows));
    std::size_t row0 = 0;
    std::vector<std::size_t> block_starts{0};

    for (const Equation& eq : equations(inst.kind)) {
        const RawMat e = raw(inst.get(eq.rhs));
        for (std::size_t i = 0; i < e.q.size(); ++i) {
            for (int c = 0; c < 4; ++c) rhs[static_cast<Eigen::Index>(row0 + 4 * i + c)] = e.q[i][c];
        }
        for (const Term& t : eq.terms) {
            const UnknownSlot& u = slots.at(t.unknown);
            // The term is a * V * b where V is the unknown or its eta transpose.
            const std::size_t v_rows = t.unknown_eta ? u.cols : u.rows;
            const std::size_t v_cols = t.unknown_eta ? u.rows : u.cols;
            const RawMat a = raw_chain(t.left, inst, v_rows);
            const RawMat b = raw_chain(t.right, inst, v_cols);
            const Mat4 em = eta_sym ? eta_mat(*inst.eta) : Mat4::Identity();
            for (std::size_t i = 0; i < e.rows; ++i) {
                for (std::size_t j = 0; j < e.cols; ++j) {
                    const std::size_t row = row0 + 4 * (i * e.cols + j);
                    for (std::size_t r = 0; r < v_rows; ++r) {
                        const Mat4 la = lmat(a.at(i, r));
                        for (std::size_t c = 0; c < v_cols; ++c) {
                            Mat4 block = la * rmat(b.at(c, j));
                            // V(r, c) is eta(X(c, r)) for an eta-transposed unknown.
                            std::size_t entry = r * u.cols + c;
                            if (t.unknown_eta) {
                                block = block * em;
                                entry = c * u.cols + r;
                            }
                            M.block<4, 4>(static_cast<Eigen::Index>(row),
                                          static_cast<Eigen::Index>(u.offset + 4 * entry)) += block;
                        }
                    }
                }
            }
        }
        row0 += 4 * e.q.size();
        block_starts.push_back(row0);
    }

    if (eta_sym) {
        // Z(r, c) - eta(Z(c, r)) = 0
        const Mat4 em = eta_mat(*inst.eta);
        for (const char* name : {"X3", "Y3", "W"}) {
            const UnknownSlot& u = slots.at(name);
            for (std::size_t r = 0; r < u.rows; ++r) {
                for (std::size_t c = 0; c < u.cols; ++c) {
                    const auto row = static_cast<Eigen::Index>(row0 + 4 * (r * u.cols + c));
                    M.block<4, 4>(row, static_cast<Eigen::Index>(u.offset + 4 * (r * u.cols + c))) +=
                        Mat4::Identity();
                    M.block<4, 4>(row, static_cast<Eigen::Index>(u.offset + 4 * (c * u.cols + r))) -= em;
                }
            }
            row0 += 4 * u.rows * u.cols;
            block_starts.push_back(row0);
        }
    }

    // Equilibrate: scale each equation's rows to unit operator norm so that a
    // mismatch in a small equation is not drowned out by a large one.
    for (std::size_t b = 0; b + 1 < block_starts.size(); ++b) {
        const auto r0 = static_cast<Eigen::Index>(block_starts[b]);
        const auto nr = static_cast<Eigen::Index>(block_starts[b + 1] - block_starts[b]);
        const double s = M.middleRows(r0, nr).norm();
        if (s > 0.0) {
            M.middleRows(r0, nr) /= s;
            rhs.segment(r0, nr) /= s;
        }
    }

    OracleResult result;
    result.unknown_reals = n_cols;
    result.equation_reals = n_rows;
    const double scale = rhs.norm();
    if (scale == 0.0) {
        result.consistent = true;
        return result;
    }
    // Minimum-norm least squares through a rank-revealing complete orthogonal
    // decomposition, i.e. x = M^+ rhs.
    const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(M);
    const Eigen::VectorXd x = cod.solve(rhs);
    result.min_residual = (M * x - rhs).norm() / scale;
    result.consistent = result.min_residual <= opts.tol;
    result.indeterminate = result.min_residual >= opts.tol && result.min_residual <= 10.0 * opts.tol;
    return result;
}

} // namespace qts
