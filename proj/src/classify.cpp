#include "p1n/classify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "p1n/clifford.hpp"
#include "p1n/kdp.hpp"

namespace p1n {

std::string equation_name(Equation eq) {
    switch (eq) {
        case Equation::dirac18a: return "dirac18a";
        case Equation::dirac18b: return "dirac18b";
        case Equation::dirac26: return "dirac26";
        case Equation::kdp6: return "kdp6";
        case Equation::kdp15: return "kdp15";
    }
    throw shape_error("equation_name: unknown enumerator");
}

std::optional<Equation> parse_equation(const std::string& name) {
    for (Equation eq : all_equations())
        if (equation_name(eq) == name) return eq;
    return std::nullopt;
}

const std::array<Equation, 5>& all_equations() {
    static const std::array<Equation, 5> eqs = {Equation::dirac18a, Equation::dirac18b,
                                                Equation::dirac26, Equation::kdp6,
                                                Equation::kdp15};
    return eqs;
}

std::string half_integer_str(int twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

std::string RepContent::str() const {
    std::string out;
    for (const RepBlock& b : blocks) {
        for (int m = 0; m < b.mult; ++m) {
            if (!out.empty()) out += " (+) ";
            out += std::string("D") + (b.epsilon > 0 ? "+" : "-") + "(" +
                   half_integer_str(b.twice_s) + "," + half_integer_str(b.twice_t) + ")";
        }
    }
    for (const RedundantBlock& b : redundant) {
        for (int m = 0; m < b.mult; ++m) {
            if (!out.empty()) out += " (+) ";
            out += "D(" + half_integer_str(b.twice_s) + "," + half_integer_str(b.twice_t) + ")";
        }
    }
    return out;
}

namespace {

constexpr double kCommuteTol = 1e-10;
constexpr double kClusterGap = 1e-8;
constexpr double kSnapTol = 1e-6;

/// Columns [a, b) of M as a new matrix.
NumericMatrix columns(const NumericMatrix& M, std::size_t a, std::size_t b) {
    NumericMatrix out(M.rows(), b - a);
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = a; j < b; ++j) out.at(i, j - a) = M.at(i, j);
    return out;
}

struct Subspace {
    NumericMatrix basis;             // dim x k, orthonormal columns
    std::vector<double> eigenvalues;  // one entry per already-applied operator
};

/// Refine each subspace into the eigenspaces of op restricted to it;
/// eigenvalues within kClusterGap of their neighbor share a cluster.
std::vector<Subspace> refine(const std::vector<Subspace>& spaces, const NumericMatrix& op) {
    std::vector<Subspace> next;
    for (const Subspace& sp : spaces) {
        NumericMatrix M = sp.basis.conj_transpose() * op * sp.basis;
        auto [vals, W] = eigh(M);
        std::size_t start = 0;
        for (std::size_t i = 1; i <= vals.size(); ++i) {
            if (i == vals.size() || vals[i] - vals[i - 1] > kClusterGap) {
                double mean = 0.0;
                for (std::size_t j = start; j < i; ++j) mean += vals[j];
                mean /= static_cast<double>(i - start);
                Subspace s;
                s.basis = sp.basis * columns(W, start, i);
                s.eigenvalues = sp.eigenvalues;
                s.eigenvalues.push_back(mean);
                next.push_back(std::move(s));
                start = i;
            }
        }
    }
    return next;
}

/// Nearest half-integer s (as 2s) with s(s+1) matching the Casimir
/// eigenvalue within kSnapTol.
int snap_casimir(double lambda, const char* which) {
    double s_est = 0.5 * (-1.0 + std::sqrt(std::max(0.0, 1.0 + 4.0 * lambda)));
    int twice = static_cast<int>(std::lround(2.0 * s_est));
    if (twice < 0) twice = 0;
    double s = 0.5 * twice;
    if (std::abs(lambda - s * (s + 1.0)) > kSnapTol) {
        throw classification_error(std::string(which) +
                                   " Casimir eigenvalue off the half-integer grid: " +
                                   std::to_string(lambda));
    }
    return twice;
}

/// Nearest half-integer (as a doubled value) within kSnapTol.
int snap_half_integer(double value, const char* which) {
    int twice = static_cast<int>(std::lround(2.0 * value));
    if (std::abs(2.0 * value - twice) > 2.0 * kSnapTol) {
        throw classification_error(std::string(which) + " eigenvalue off the half-integer grid: " +
                                   std::to_string(value));
    }
    return twice;
}

}  // namespace

RepContent classify_ops(const ClassifyOps& ops) {
    const std::size_t dim = ops.energy.rows();
    const std::array<const NumericMatrix*, 5> family = {&ops.energy, &ops.S_sq, &ops.T_sq,
                                                        &ops.S3, &ops.T3};
    static const char* names[5] = {"energy", "S_sq", "T_sq", "S3", "T3"};
    for (const NumericMatrix* m : family) {
        if (m->rows() != dim || m->cols() != dim) {
            throw shape_error("classify_ops: operator dimensions disagree");
        }
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            double res = commutator(*family[i], *family[j]).max_abs();
            if (res > kCommuteTol) {
                throw contract_error(std::string("classify_ops: [") + names[i] + ", " + names[j] +
                                     "] = " + std::to_string(res) + " exceeds " +
                                     std::to_string(kCommuteTol));
            }
        }
    }

    std::vector<Subspace> spaces{{NumericMatrix::identity(dim), {}}};
    for (const NumericMatrix* m : family) spaces = refine(spaces, *m);

    // Aggregate joint-eigenspace dimensions onto (epsilon, 2s, 2t) keys.
    std::map<std::tuple<int, int, int>, std::size_t> dims;
    for (const Subspace& sp : spaces) {
        double e_val = sp.eigenvalues[0];
        long rounded = std::lround(e_val);
        if (std::abs(e_val - static_cast<double>(rounded)) > kSnapTol || rounded < -1 ||
            rounded > 1) {
            throw classification_error("classify_ops: rest-frame energy eigenvalue " +
                                       std::to_string(e_val) + " is not in {-1, 0, +1}");
        }
        int eps = static_cast<int>(rounded);
        int twice_s = snap_casimir(sp.eigenvalues[1], "spin");
        int twice_t = snap_casimir(sp.eigenvalues[2], "isospin");
        int twice_s3 = snap_half_integer(sp.eigenvalues[3], "S3");
        int twice_t3 = snap_half_integer(sp.eigenvalues[4], "T3");
        if (std::abs(twice_s3) > twice_s || std::abs(twice_t3) > twice_t) {
            throw classification_error(
                "classify_ops: a third-component eigenvalue exceeds its Casimir bound");
        }
        dims[{eps, twice_s, twice_t}] += sp.basis.cols();
    }

    RepContent content;
    content.dim = dim;
    std::size_t total = 0;
    for (const auto& [key, d] : dims) {
        auto [eps, twice_s, twice_t] = key;
        std::size_t block_dim = static_cast<std::size_t>(twice_s + 1) *
                                static_cast<std::size_t>(twice_t + 1);
        if (d % block_dim != 0) {
            throw classification_error("classify_ops: eigenspace dimension " + std::to_string(d) +
                                       " is not a multiple of (2s+1)(2t+1) = " +
                                       std::to_string(block_dim));
        }
        int mult = static_cast<int>(d / block_dim);
        if (eps == 0) {
            content.redundant.push_back({twice_s, twice_t, mult});
        } else {
            content.blocks.push_back({eps, twice_s, twice_t, mult});
        }
        total += d;
    }
    if (total != dim) {
        throw classification_error("classify_ops: block dimensions sum to " +
                                   std::to_string(total) + ", expected " + std::to_string(dim));
    }
    std::sort(content.blocks.begin(), content.blocks.end(),
              [](const RepBlock& a, const RepBlock& b) {
                  return std::tuple(-a.epsilon, -a.twice_s, -a.twice_t) <
                         std::tuple(-b.epsilon, -b.twice_s, -b.twice_t);
              });
    std::sort(content.redundant.begin(), content.redundant.end(),
              [](const RedundantBlock& a, const RedundantBlock& b) {
                  return std::tuple(-a.twice_s, -a.twice_t) < std::tuple(-b.twice_s, -b.twice_t);
              });
    return content;
}

RepContent classify(const EquationSpec& spec) {
    NumericMatrix H0 = spec.H_at({0.0, 0.0, 0.0, 0.0});
    NumericMatrix expected = to_numeric(spec.energy_sign_op).scaled(spec.kappa);
    if ((H0 - expected).max_abs() > 1e-12) {
        throw contract_error(
            "classify: rest-frame Hamiltonian does not equal kappa times the energy-sign "
            "operator");
    }
    ClassifyOps ops;
    ops.energy = H0.scaled(1.0 / spec.kappa);
    ExactMatrix s_sq = spec.S_ops[0] * spec.S_ops[0] + spec.S_ops[1] * spec.S_ops[1] +
                       spec.S_ops[2] * spec.S_ops[2];
    ExactMatrix t_sq = spec.T_ops[0] * spec.T_ops[0] + spec.T_ops[1] * spec.T_ops[1] +
                       spec.T_ops[2] * spec.T_ops[2];
    ops.S_sq = to_numeric(s_sq);
    ops.T_sq = to_numeric(t_sq);
    ops.S3 = to_numeric(spec.S_ops[2]);
    ops.T3 = to_numeric(spec.T_ops[2]);
    return classify_ops(ops);
}

namespace {

EquationSpec dirac_spec(Equation eq, double kappa) {
    const bool flipped = (eq == Equation::dirac18b);
    GammaSet g = build_gamma_5d();
    SpinIsospinPair split = spin_isospin_split(spin_tensor(g));
    EquationSpec spec;
    spec.name = equation_name(eq);
    spec.dim = g.dim;
    spec.kappa = kappa;
    spec.S_ops = split.S;
    spec.T_ops = split.T;
    const ExactMatrix& beta = g.by_label(0);
    spec.energy_sign_op = flipped ? -beta : beta;
    std::array<NumericMatrix, 4> alpha;
    for (int k = 1; k <= 4; ++k)
        alpha[static_cast<std::size_t>(k - 1)] = to_numeric(beta * g.by_label(k));
    NumericMatrix mass = to_numeric(spec.energy_sign_op).scaled(kappa);
    spec.H_at = [alpha, mass](const std::array<double, 4>& p) {
        NumericMatrix H = mass;
        for (std::size_t k = 0; k < 4; ++k) H = H + alpha[k].scaled(p[k]);
        return H;
    };
    return spec;
}

EquationSpec dirac26_spec(double kappa) {
    GammaSet g = build_gamma_8d();
    SpinIsospinPair split = spin_isospin_split(spin_tensor(g));
    EquationSpec spec;
    spec.name = equation_name(Equation::dirac26);
    spec.dim = g.dim;
    spec.kappa = kappa;
    spec.S_ops = split.S;
    spec.T_ops = split.T;
    spec.energy_sign_op = g.by_label(0);
    std::array<NumericMatrix, 4> alpha;
    for (int k = 1; k <= 4; ++k)
        alpha[static_cast<std::size_t>(k - 1)] = to_numeric(g.by_label(0) * g.by_label(k));
    NumericMatrix mass = to_numeric(spec.energy_sign_op).scaled(kappa);
    spec.H_at = [alpha, mass](const std::array<double, 4>& p) {
        NumericMatrix H = mass;
        for (std::size_t k = 0; k < 4; ++k) H = H + alpha[k].scaled(p[k]);
        return H;
    };
    return spec;
}

EquationSpec kdp_spec(Equation eq, double kappa) {
    BetaSet set = (eq == Equation::kdp6) ? build_beta6() : build_beta15();
    SpinIsospinPair split = kdp_spin_isospin_split(set);
    EquationSpec spec;
    spec.name = equation_name(eq);
    spec.dim = set.dim;
    spec.kappa = kappa;
    spec.S_ops = split.S;
    spec.T_ops = split.T;
    spec.energy_sign_op = set.by_label(5);
    spec.H_at = [set, kappa](const std::array<double, 4>& p) {
        return kdp_hamiltonian(set, p, kappa).H;
    };
    return spec;
}

void verify_spec(const EquationSpec& spec) {
    NumericMatrix H0 = spec.H_at({0.0, 0.0, 0.0, 0.0});
    if (H0.rows() != spec.dim || spec.energy_sign_op.rows() != spec.dim) {
        throw shape_error("build_equation_spec: dimension mismatch");
    }
    for (const auto& ops : {spec.S_ops, spec.T_ops}) {
        for (const ExactMatrix& m : ops) {
            if (m.rows() != spec.dim || m.cols() != spec.dim) {
                throw shape_error("build_equation_spec: spin operator dimension mismatch");
            }
            if (commutator(H0, to_numeric(m)).max_abs() > 1e-12) {
                throw contract_error(
                    "build_equation_spec: rest-frame Hamiltonian fails to commute with a spin "
                    "operator");
            }
        }
    }
}

}  // namespace

EquationSpec build_equation_spec(Equation eq, double kappa) {
    if (!(kappa > 0.0)) throw contract_error("build_equation_spec: kappa must be positive");
    EquationSpec spec;
    switch (eq) {
        case Equation::dirac18a:
        case Equation::dirac18b: spec = dirac_spec(eq, kappa); break;
        case Equation::dirac26: spec = dirac26_spec(kappa); break;
        case Equation::kdp6:
        case Equation::kdp15: spec = kdp_spec(eq, kappa); break;
    }
    verify_spec(spec);
    return spec;
}

RepContent classify_dirac18b() { return classify(build_equation_spec(Equation::dirac18b, 1.0)); }

RepContent classify_kdp6() { return classify(build_equation_spec(Equation::kdp6, 1.0)); }

bool is_ptc_pattern(const RepContent& content) {
    std::map<std::tuple<int, int, int>, int> counts;
    for (const RepBlock& b : content.blocks) counts[{b.epsilon, b.twice_s, b.twice_t}] += b.mult;
    auto count = [&](int eps, int ts, int tt) {
        auto it = counts.find({eps, ts, tt});
        return it == counts.end() ? 0 : it->second;
    };
    std::map<std::pair<int, int>, bool> seen;
    for (const RepBlock& b : content.blocks) {
        std::pair<int, int> key = std::minmax(b.twice_s, b.twice_t);
        if (seen.count(key)) continue;
        seen[key] = true;
        int ts = key.second;  // larger value first; (ts, tt) and (tt, ts) cover both orders
        int tt = key.first;
        int c1 = count(+1, ts, tt);
        int c2 = count(-1, ts, tt);
        if (ts == tt) {
            if (c1 != c2) return false;
        } else {
            int c3 = count(+1, tt, ts);
            int c4 = count(-1, tt, ts);
            if (c1 != c2 || c2 != c3 || c3 != c4) return false;
        }
    }
    return true;
}

nlohmann::ordered_json rep_content_json(const RepContent& content) {
    nlohmann::ordered_json j;
    j["blocks"] = nlohmann::ordered_json::array();
    for (const RepBlock& b : content.blocks) {
        j["blocks"].push_back({{"epsilon", b.epsilon},
                               {"s", half_integer_str(b.twice_s)},
                               {"t", half_integer_str(b.twice_t)},
                               {"mult", b.mult}});
    }
    j["redundant"] = nlohmann::ordered_json::array();
    for (const RedundantBlock& b : content.redundant) {
        j["redundant"].push_back({{"s", half_integer_str(b.twice_s)},
                                  {"t", half_integer_str(b.twice_t)},
                                  {"mult", b.mult}});
    }
    return j;
}

}  // namespace p1n
