#include "p1n/kdp.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

namespace p1n {

namespace {

const ExactScalar kI = ExactScalar::i();

/// First trilinear triple (u, v, l) violated by the set, or (0, 0, 0).
std::array<int, 3> first_violating_triple(const BetaSet& set) {
    const ExactMatrix id = ExactMatrix::identity(set.dim);
    for (int u = 1; u <= 5; ++u)
        for (int v = 1; v <= 5; ++v)
            for (int l = 1; l <= 5; ++l) {
                const ExactMatrix& mu = set.by_label(u);
                const ExactMatrix& mv = set.by_label(v);
                const ExactMatrix& ml = set.by_label(l);
                ExactMatrix lhs = mu * mv * ml + ml * mv * mu;
                ExactMatrix rhs = ml.scaled(ExactScalar(u == v ? 1 : 0)) +
                                  mu.scaled(ExactScalar(l == v ? 1 : 0));
                if (lhs != rhs) return {u, v, l};
            }
    return {0, 0, 0};
}

void verify_on_construction(const BetaSet& set) {
    for (int u = 1; u <= 5; ++u) {
        if (!set.by_label(u).is_hermitian()) {
            throw construction_error("BetaSet: matrix " + std::to_string(u) +
                                     " is not Hermitian");
        }
    }
    std::array<int, 3> bad = first_violating_triple(set);
    if (bad[0] != 0) {
        throw construction_error("BetaSet: trilinear relation failed at triple (" +
                                 std::to_string(bad[0]) + "," + std::to_string(bad[1]) + "," +
                                 std::to_string(bad[2]) + ")");
    }
}

}  // namespace

const ExactMatrix& BetaSet::by_label(int label) const {
    for (std::size_t i = 0; i < metric.labels.size(); ++i)
        if (metric.labels[i] == label) return matrices[i];
    throw shape_error("BetaSet::by_label: unknown label");
}

BetaSet build_beta6() {
    static const BetaSet cached = [] {
        BetaSet set;
        set.metric = MetricSignature::all_plus(5);
        set.dim = 6;
        for (int mu = 1; mu <= 5; ++mu) {
            ExactMatrix m(6, 6);
            m.at(static_cast<std::size_t>(mu - 1), 5) = ExactScalar(1);
            m.at(5, static_cast<std::size_t>(mu - 1)) = ExactScalar(1);
            set.matrices.push_back(std::move(m));
        }
        verify_on_construction(set);
        return set;
    }();
    return cached;
}

const std::vector<MatrixEntry>& beta15_entries() {
    static const std::vector<MatrixEntry> entries = {
        {1, 4, 15, +1},  {1, 7, 14, +1},  {1, 9, 13, +1},  {1, 10, 12, +1}, {1, 12, 10, +1},
        {1, 13, 9, +1},  {1, 14, 7, +1},  {1, 15, 4, +1},  {2, 3, 15, +1},  {2, 6, 14, +1},
        {2, 8, 13, +1},  {2, 10, 11, -1}, {2, 11, 10, -1}, {2, 13, 8, +1},  {2, 14, 6, +1},
        {2, 15, 3, +1},  {3, 2, 15, +1},  {3, 5, 14, +1},  {3, 8, 12, -1},  {3, 9, 11, -1},
        {3, 11, 9, -1},  {3, 12, 8, -1},  {3, 14, 5, +1},  {3, 15, 2, +1},  {4, 1, 15, +1},
        {4, 5, 13, -1},  {4, 6, 12, -1},  {4, 7, 11, -1},  {4, 11, 7, -1},  {4, 12, 6, -1},
        {4, 13, 5, -1},  {4, 15, 1, +1},  {5, 1, 14, -1},  {5, 2, 13, -1},  {5, 3, 12, -1},
        {5, 4, 11, -1},  {5, 11, 4, -1},  {5, 12, 3, -1},  {5, 13, 2, -1},  {5, 14, 1, -1}};
    return entries;
}

const std::vector<MatrixEntry>& beta15_trusted_entries() {
    // Everything from beta15_entries except the repaired pair of matrix 3.
    static const std::vector<MatrixEntry> trusted = [] {
        std::vector<MatrixEntry> out;
        for (const MatrixEntry& e : beta15_entries()) {
            if (e.matrix == 3 && ((e.row == 5 && e.col == 14) || (e.row == 14 && e.col == 5)))
                continue;
            out.push_back(e);
        }
        return out;
    }();
    return trusted;
}

BetaSet build_beta15() {
    static const BetaSet cached = beta_set_from_entries(beta15_entries(), 15);
    return cached;
}

namespace {

using IntMat = std::array<std::array<int, 15>, 15>;

IntMat int_mat_zero() {
    IntMat m{};
    return m;
}

IntMat int_mul(const IntMat& a, const IntMat& b) {
    IntMat r{};
    for (int i = 0; i < 15; ++i)
        for (int k = 0; k < 15; ++k) {
            int aik = a[i][k];
            if (aik == 0) continue;
            for (int j = 0; j < 15; ++j) r[i][j] += aik * b[k][j];
        }
    return r;
}

/// All 125 trilinear triples over plain integer matrices (the search works
/// on sign patterns only, so exact rational arithmetic is unnecessary).
bool int_triples_hold(const std::array<IntMat, 5>& m) {
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v)
            for (int l = 0; l < 5; ++l) {
                IntMat lhs1 = int_mul(int_mul(m[u], m[v]), m[l]);
                IntMat lhs2 = int_mul(int_mul(m[l], m[v]), m[u]);
                for (int i = 0; i < 15; ++i)
                    for (int j = 0; j < 15; ++j) {
                        int rhs = (u == v ? m[l][i][j] : 0) + (l == v ? m[u][i][j] : 0);
                        if (lhs1[i][j] + lhs2[i][j] != rhs) return false;
                    }
            }
    return true;
}

std::array<IntMat, 5> int_mats_from_entries(const std::vector<MatrixEntry>& entries) {
    std::array<IntMat, 5> m{int_mat_zero(), int_mat_zero(), int_mat_zero(), int_mat_zero(),
                            int_mat_zero()};
    for (const MatrixEntry& e : entries)
        m[static_cast<std::size_t>(e.matrix - 1)][e.row - 1][e.col - 1] = e.value;
    return m;
}

}  // namespace

std::vector<MatrixEntry> beta15_completion_search() {
    std::array<IntMat, 5> base = int_mats_from_entries(beta15_trusted_entries());
    std::vector<MatrixEntry> found;
    for (int r = 1; r <= 10; ++r) {
        for (int c = 11; c <= 15; ++c) {
            if (base[2][r - 1][c - 1] != 0) continue;
            for (int s : {+1, -1}) {
                std::array<IntMat, 5> cand = base;
                cand[2][r - 1][c - 1] = s;
                cand[2][c - 1][r - 1] = s;
                if (int_triples_hold(cand)) found.push_back({3, r, c, s});
            }
        }
    }
    return found;
}

BetaSet repair_beta15() {
    std::vector<MatrixEntry> completions = beta15_completion_search();
    if (completions.empty()) {
        BetaSet broken;
        broken.metric = MetricSignature::all_plus(5);
        broken.dim = 15;
        std::array<IntMat, 5> ints = int_mats_from_entries(beta15_trusted_entries());
        for (int mu = 0; mu < 5; ++mu) {
            ExactMatrix m(15, 15);
            for (int i = 0; i < 15; ++i)
                for (int j = 0; j < 15; ++j)
                    if (ints[static_cast<std::size_t>(mu)][i][j] != 0)
                        m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                            ExactScalar(ints[static_cast<std::size_t>(mu)][i][j]);
            broken.matrices.push_back(std::move(m));
        }
        std::array<int, 3> bad = first_violating_triple(broken);
        throw construction_error(
            "repair_beta15: no symmetric unit-pair completion satisfies the trilinear "
            "relation; seed violates triple (" +
            std::to_string(bad[0]) + "," + std::to_string(bad[1]) + "," + std::to_string(bad[2]) +
            ")");
    }
    const MatrixEntry& fix = completions.front();
    std::vector<MatrixEntry> entries = beta15_trusted_entries();
    entries.push_back(fix);
    entries.push_back({fix.matrix, fix.col, fix.row, fix.value});
    BetaSet set = beta_set_from_entries(entries, 15);
    // The squared fifth matrix must be the principal/redundant indicator
    // diag(1 x4, 0 x6, 1 x4, 0).
    ExactMatrix b5sq = set.by_label(5) * set.by_label(5);
    ExactMatrix expected(15, 15);
    for (std::size_t i : {0u, 1u, 2u, 3u, 10u, 11u, 12u, 13u}) expected.at(i, i) = ExactScalar(1);
    if (b5sq != expected) {
        throw construction_error(
            "repair_beta15: completion does not reproduce the squared fifth-matrix pattern");
    }
    return set;
}

std::vector<MatrixEntry> load_matrix_entries(std::istream& in) {
    std::vector<MatrixEntry> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        MatrixEntry e{};
        if (!(fields >> e.matrix)) continue;  // blank after comment strip
        if (!(fields >> e.row >> e.col >> e.value)) {
            throw construction_error("matrix entry table: malformed line " +
                                     std::to_string(lineno));
        }
        std::string extra;
        if (fields >> extra) {
            throw construction_error("matrix entry table: trailing fields on line " +
                                     std::to_string(lineno));
        }
        if (e.matrix < 1 || e.matrix > 5 || e.row < 1 || e.col < 1 ||
            (e.value != 1 && e.value != -1)) {
            throw construction_error("matrix entry table: out-of-range values on line " +
                                     std::to_string(lineno));
        }
        entries.push_back(e);
    }
    return entries;
}

std::vector<MatrixEntry> load_matrix_entries_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw construction_error("matrix entry table: cannot open " + path);
    return load_matrix_entries(in);
}

BetaSet beta_set_from_entries(const std::vector<MatrixEntry>& entries, std::size_t dim) {
    BetaSet set;
    set.metric = MetricSignature::all_plus(5);
    set.dim = dim;
    for (int mu = 0; mu < 5; ++mu) set.matrices.emplace_back(dim, dim);
    for (const MatrixEntry& e : entries) {
        if (static_cast<std::size_t>(e.row) > dim || static_cast<std::size_t>(e.col) > dim) {
            throw shape_error("beta_set_from_entries: entry index exceeds dimension");
        }
        ExactScalar& cell = set.matrices[static_cast<std::size_t>(e.matrix - 1)].at(
            static_cast<std::size_t>(e.row - 1), static_cast<std::size_t>(e.col - 1));
        if (!cell.is_zero()) {
            throw construction_error("beta_set_from_entries: duplicate entry for matrix " +
                                     std::to_string(e.matrix) + " cell (" +
                                     std::to_string(e.row) + "," + std::to_string(e.col) + ")");
        }
        cell = ExactScalar(e.value);
    }
    verify_on_construction(set);
    return set;
}

RelationReport verify_kdp(const BetaSet& set) {
    RelationReport rep;
    for (int u = 1; u <= 5; ++u)
        for (int v = 1; v <= 5; ++v)
            for (int l = 1; l <= 5; ++l) {
                const ExactMatrix& mu = set.by_label(u);
                const ExactMatrix& mv = set.by_label(v);
                const ExactMatrix& ml = set.by_label(l);
                ExactMatrix lhs = mu * mv * ml + ml * mv * mu;
                ExactMatrix rhs = ml.scaled(ExactScalar(set.metric.g(u, v))) +
                                  mu.scaled(ExactScalar(set.metric.g(l, v)));
                rep.add_exact("triple(" + std::to_string(u) + "," + std::to_string(v) + "," +
                                  std::to_string(l) + ")",
                              lhs == rhs);
            }
    return rep;
}

SpinTensor kdp_spin_tensor(const BetaSet& set) {
    SpinTensor S(set.dim);
    for (int u = 1; u <= 5; ++u)
        for (int v = u + 1; v <= 5; ++v)
            S.set(u, v, commutator(set.by_label(u), set.by_label(v)).scaled(kI));
    return S;
}

SpinIsospinPair kdp_spin_isospin_split(const BetaSet& set) {
    SpinTensor S = kdp_spin_tensor(set);
    SpinTensor flipped(set.dim);
    for (int k = 1; k <= 4; ++k)
        for (int l = k + 1; l <= 4; ++l) flipped.set(k, l, -S.component(k, l));
    return spin_isospin_split(flipped);
}

KdpHamiltonian kdp_hamiltonian(const BetaSet& set, const std::array<double, 4>& p, double kappa) {
    if (!(kappa > 0.0)) throw contract_error("kdp_hamiltonian: kappa must be positive");
    SpinTensor S = kdp_spin_tensor(set);
    NumericMatrix H = to_numeric(set.by_label(5)).scaled(kappa);
    for (int k = 1; k <= 4; ++k) {
        H = H + to_numeric(S.component(5, k)).scaled(p[static_cast<std::size_t>(k - 1)]);
    }
    if (H.hermiticity_defect() > 1e-12) {
        throw contract_error("kdp_hamiltonian: result is not Hermitian");
    }
    return {std::move(H), p, kappa};
}

ExactMatrix kdp_hamiltonian_exact(const BetaSet& set, const std::array<Rational, 4>& p,
                                  const Rational& kappa) {
    if (!(kappa > 0)) throw contract_error("kdp_hamiltonian_exact: kappa must be positive");
    SpinTensor S = kdp_spin_tensor(set);
    ExactMatrix H = set.by_label(5).scaled(ExactScalar(kappa));
    for (int k = 1; k <= 4; ++k) {
        H = H + S.component(5, k).scaled(ExactScalar(p[static_cast<std::size_t>(k - 1)]));
    }
    if (!H.is_hermitian()) throw contract_error("kdp_hamiltonian_exact: result is not Hermitian");
    return H;
}

RelationReport psquared_check(const BetaSet& set, int trials, unsigned seed) {
    if (trials < 1) throw contract_error("psquared_check: trials must be >= 1");
    RelationReport rep;

    const ExactMatrix& b5 = set.by_label(5);
    const ExactMatrix b5sq = b5 * b5;
    const std::size_t principal_rank = b5sq.rank();

    // Rest frame: H(0, 1)^2 is exactly the squared fifth matrix.
    {
        ExactMatrix h0 = kdp_hamiltonian_exact(set, {Rational(0), Rational(0), Rational(0),
                                                     Rational(0)},
                                               Rational(1));
        rep.add_exact("rest_frame_square", h0 * h0 == b5sq);
    }

    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-8, 8);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> pos(1, 8);
    for (int t = 0; t < trials; ++t) {
        std::array<Rational, 4> p;
        for (auto& c : p) c = Rational(num(rng)) / den(rng);
        Rational kappa = Rational(pos(rng)) / den(rng);
        Rational omega_sq = kappa * kappa;
        for (const auto& c : p) omega_sq += c * c;

        ExactMatrix H = kdp_hamiltonian_exact(set, p, kappa);
        const std::string tag = "[" + std::to_string(t) + "]";
        rep.add_exact("hermitian" + tag, H.is_hermitian());
        // H^3 = (p^2 + kappa^2) H pins every nonzero eigenvalue of H^2.
        ExactMatrix Hsq = H * H;
        rep.add_exact("cubic_dispersion" + tag, Hsq * H == H.scaled(ExactScalar(omega_sq)));
        // Zero trace: eigenvalues +w and -w occur with equal multiplicity.
        rep.add_exact("zero_trace" + tag, H.trace() == ExactScalar(0));
        // trace H^2 = rank(m5^2) * w^2: the nonzero multiplicity equals the
        // principal rank, so H^2 - p^2 acts as kappa^2 on the principal
        // subspace and the redundant one stays null.
        rep.add_exact("squared_trace_multiplicity" + tag,
                      Hsq.trace() ==
                          ExactScalar(omega_sq * Rational(static_cast<long>(principal_rank))));
    }
    return rep;
}

RelationReport covariance_check(const BetaSet& set) {
    RelationReport rep;
    SpinTensor S = kdp_spin_tensor(set);
    const ExactScalar minus_i = -kI;
    for (int u = 1; u <= 5; ++u)
        for (int r = 1; r <= 5; ++r)
            for (int s = 1; s <= 5; ++s) {
                ExactMatrix lhs = commutator(set.by_label(u), S.component(r, s)).scaled(minus_i);
                ExactMatrix rhs = set.by_label(s).scaled(ExactScalar(set.metric.g(u, r))) -
                                  set.by_label(r).scaled(ExactScalar(set.metric.g(u, s)));
                rep.add_exact("cov(" + std::to_string(u) + ";" + std::to_string(r) + "," +
                                  std::to_string(s) + ")",
                              lhs == rhs);
            }
    return rep;
}

}  // namespace p1n
