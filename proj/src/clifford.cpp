#include "p1n/clifford.hpp"

#include <algorithm>

namespace p1n {

namespace {

const ExactScalar kI = ExactScalar::i();

ExactMatrix pauli(int a) {
    switch (a) {
        case 1: return ExactMatrix::from_ints({{0, 1}, {1, 0}});
        case 2: {
            ExactMatrix m(2, 2);
            m.at(0, 1) = -kI;
            m.at(1, 0) = kI;
            return m;
        }
        case 3: return ExactMatrix::from_ints({{1, 0}, {0, -1}});
        default: throw shape_error("pauli: index out of range");
    }
}

/// [[A, B], [C, D]] from equal-size square blocks.
ExactMatrix blocks2(const ExactMatrix& A, const ExactMatrix& B, const ExactMatrix& C,
                    const ExactMatrix& D) {
    const std::size_t n = A.rows();
    ExactMatrix m(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m.at(i, j) = A.at(i, j);
            m.at(i, n + j) = B.at(i, j);
            m.at(n + i, j) = C.at(i, j);
            m.at(n + i, n + j) = D.at(i, j);
        }
    return m;
}

void verify_on_construction(const GammaSet& set) {
    RelationReport rep = verify_clifford(set);
    if (!rep.pass()) {
        throw construction_error("GammaSet: anticommutation relations failed on construction");
    }
}

}  // namespace

const ExactMatrix& GammaSet::by_label(int label) const {
    for (std::size_t i = 0; i < metric.labels.size(); ++i)
        if (metric.labels[i] == label) return matrices[i];
    throw shape_error("GammaSet::by_label: unknown label");
}

void SpinTensor::set(int k, int l, ExactMatrix m) {
    if (k == l) throw shape_error("SpinTensor::set: diagonal component");
    if (!m.is_hermitian()) throw construction_error("SpinTensor: component is not Hermitian");
    if (dim_ == 0) dim_ = m.rows();
    if (m.rows() != dim_ || m.cols() != dim_) throw shape_error("SpinTensor::set: size mismatch");
    if (k < l) {
        comp_.emplace(std::make_pair(k, l), std::move(m));
    } else {
        comp_.emplace(std::make_pair(l, k), -m);
    }
}

ExactMatrix SpinTensor::component(int k, int l) const {
    if (k == l) return ExactMatrix::zero(dim_, dim_);
    auto it = comp_.find(k < l ? std::make_pair(k, l) : std::make_pair(l, k));
    if (it == comp_.end()) throw shape_error("SpinTensor::component: missing index pair");
    return k < l ? it->second : -it->second;
}

bool SpinTensor::has(int k, int l) const {
    if (k == l) return dim_ > 0;
    return comp_.count(k < l ? std::make_pair(k, l) : std::make_pair(l, k)) > 0;
}

std::vector<std::pair<int, int>> SpinTensor::index_pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(comp_.size());
    for (const auto& kv : comp_) out.push_back(kv.first);
    return out;
}

GammaSet build_gamma_5d() {
    GammaSet set;
    set.metric = MetricSignature::lorentz(4);
    set.dim = 4;
    const ExactMatrix z2 = ExactMatrix::zero(2, 2);
    const ExactMatrix i2 = ExactMatrix::identity(2);
    // timelike: diag(1, 1, -1, -1)
    set.matrices.push_back(blocks2(i2, z2, z2, -i2));
    // three spacelike from the off-diagonal Pauli blocks
    for (int a = 1; a <= 3; ++a) {
        ExactMatrix s = pauli(a);
        set.matrices.push_back(blocks2(z2, s, -s, z2));
    }
    // fourth spacelike: i times the off-diagonal identity blocks
    set.matrices.push_back(blocks2(z2, i2, i2, z2).scaled(kI));
    verify_on_construction(set);
    return set;
}

GammaSet build_gamma_8d() {
    GammaSet set;
    set.metric = MetricSignature::lorentz(6);
    set.dim = 8;
    GammaSet g5 = build_gamma_5d();
    const ExactMatrix z4 = ExactMatrix::zero(4, 4);
    const ExactMatrix i4 = ExactMatrix::identity(4);
    // timelike: diag(I4, -I4)
    set.matrices.push_back(blocks2(i4, z4, z4, -i4));
    // labels 1..4: off-diagonal blocks of the 4x4 spacelike matrices
    for (int k = 1; k <= 4; ++k) {
        const ExactMatrix& gk = g5.by_label(k);
        set.matrices.push_back(blocks2(z4, gk, gk, z4));
    }
    // label 5: i times off-diagonal blocks of the 4x4 timelike matrix
    set.matrices.push_back(blocks2(z4, g5.by_label(0), g5.by_label(0), z4).scaled(kI));
    // label 6: symplectic off-diagonal identity blocks
    set.matrices.push_back(blocks2(z4, i4, -i4, z4));
    // The designated product matrix: -i * m1 m2 m3 m4 m5 m6.
    ExactMatrix prod = set.matrices[1];
    for (int k = 2; k <= 6; ++k) prod = prod * set.matrices[static_cast<std::size_t>(k)];
    set.designated_product = prod.scaled(-kI);
    verify_on_construction(set);
    return set;
}

GammaSet build_gamma_generic(int num_spatial) {
    if (num_spatial < 1) throw shape_error("build_gamma_generic: need at least one spatial index");
    if (num_spatial > 12) {
        throw resource_error("build_gamma_generic: num_spatial > 12 exceeds the dimension cap 128");
    }
    // Seed: timelike diag(1,-1); first spacelike i*sigma_1; optional second
    // spacelike i*sigma_2. Each recursion step doubles the dimension with
    // m -> diag(m, -m) and appends i*offdiag(I), i*antidiag(+I/-I)-style
    // partners, keeping the timelike matrix first and diagonal.
    std::vector<ExactMatrix> mats;
    mats.push_back(pauli(3));
    mats.push_back(pauli(1).scaled(kI));
    if (num_spatial >= 2) mats.push_back(pauli(2).scaled(kI));
    int have = std::min(num_spatial, 2);
    while (have < num_spatial) {
        const std::size_t d = mats[0].rows();
        const ExactMatrix z(d, d);
        const ExactMatrix id = ExactMatrix::identity(d);
        std::vector<ExactMatrix> next;
        next.reserve(mats.size() + 2);
        for (const ExactMatrix& m : mats) next.push_back(blocks2(m, z, z, -m));
        next.push_back(blocks2(z, id, id, z).scaled(kI));
        ++have;
        if (have < num_spatial) {
            ExactMatrix off = blocks2(z, id, -id, z);  // squares to -I
            next.push_back(off);
            ++have;
        }
        mats = std::move(next);
    }
    GammaSet set;
    set.metric = MetricSignature::lorentz(num_spatial);
    set.matrices = std::move(mats);
    set.dim = set.matrices[0].rows();
    verify_on_construction(set);
    return set;
}

RelationReport verify_clifford(const GammaSet& set) {
    RelationReport rep;
    const std::size_t n = set.matrices.size();
    const ExactMatrix id = ExactMatrix::identity(set.dim);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            int la = set.metric.labels[a];
            int lb = set.metric.labels[b];
            ExactMatrix expected = id.scaled(ExactScalar(2 * set.metric.g(la, lb)));
            bool ok = anticommutator(set.matrices[a], set.matrices[b]) == expected;
            rep.add_exact("anticomm(g" + std::to_string(la) + ",g" + std::to_string(lb) + ")", ok);
        }
    }
    return rep;
}

ProductConstraintResult check_product_constraint(const GammaSet& set) {
    const std::size_t n = set.matrices.size();
    if (n != 5 && n != 7) {
        throw shape_error("check_product_constraint: expected a five- or seven-matrix set");
    }
    ProductConstraintResult res;
    ExactMatrix prod4 = set.matrices[1] * set.matrices[2] * set.matrices[3] * set.matrices[4];
    res.holds_product_rule = (prod4 == set.matrices[0]);
    if (n == 7 && set.designated_product.has_value()) {
        ExactMatrix prod6 = set.matrices[1];
        for (std::size_t k = 2; k <= 6; ++k) prod6 = prod6 * set.matrices[k];
        res.holds_designated_product = (prod6.scaled(-kI) == *set.designated_product);
    }
    return res;
}

SpinTensor spin_tensor(const GammaSet& set) {
    SpinTensor S(set.dim);
    const ExactScalar quarter_i = kI * ExactScalar::frac(1, 4);
    for (std::size_t a = 0; a < set.metric.labels.size(); ++a) {
        for (std::size_t b = a + 1; b < set.metric.labels.size(); ++b) {
            int k = set.metric.labels[a];
            int l = set.metric.labels[b];
            if (set.metric.g(k, k) != -1 || set.metric.g(l, l) != -1) continue;  // spatial only
            S.set(k, l, commutator(set.matrices[a], set.matrices[b]).scaled(quarter_i));
        }
    }
    return S;
}

namespace {

void verify_su2_pair(const SpinIsospinPair& p) {
    const ExactScalar i = kI;
    for (int a = 0; a < 3; ++a) {
        int b = (a + 1) % 3;
        int c = (a + 2) % 3;
        if (commutator(p.S[a], p.S[b]) != p.S[c].scaled(i)) {
            throw construction_error("spin_isospin_split: [S_a, S_b] = i S_c failed");
        }
        if (commutator(p.T[a], p.T[b]) != p.T[c].scaled(i)) {
            throw construction_error("spin_isospin_split: [T_a, T_b] = i T_c failed");
        }
        for (int t = 0; t < 3; ++t) {
            if (!commutator(p.S[a], p.T[t]).is_zero()) {
                throw construction_error("spin_isospin_split: [S_a, T_b] = 0 failed");
            }
        }
        if (!commutator(p.S_sq, p.S[a]).is_zero() || !commutator(p.S_sq, p.T[a]).is_zero() ||
            !commutator(p.T_sq, p.S[a]).is_zero() || !commutator(p.T_sq, p.T[a]).is_zero()) {
            throw construction_error("spin_isospin_split: Casimir is not central");
        }
    }
}

}  // namespace

SpinIsospinPair spin_isospin_split(const SpinTensor& S) {
    for (int k = 1; k <= 4; ++k)
        for (int l = k + 1; l <= 4; ++l)
            if (!S.has(k, l)) throw shape_error("spin_isospin_split: components 1..4 required");
    const ExactScalar half = ExactScalar::frac(1, 2);
    SpinIsospinPair pair{};
    for (int a = 1; a <= 3; ++a) {
        int b = a % 3 + 1;
        int c = b % 3 + 1;  // (a, b, c) cyclic in (1, 2, 3)
        ExactMatrix Sbc = S.component(b, c);
        ExactMatrix S4a = S.component(4, a);
        pair.S[static_cast<std::size_t>(a - 1)] = (Sbc + S4a).scaled(half);
        pair.T[static_cast<std::size_t>(a - 1)] = (Sbc - S4a).scaled(half);
    }
    pair.S_sq = pair.S[0] * pair.S[0] + pair.S[1] * pair.S[1] + pair.S[2] * pair.S[2];
    pair.T_sq = pair.T[0] * pair.T[0] + pair.T[1] * pair.T[1] + pair.T[2] * pair.T[2];
    verify_su2_pair(pair);
    return pair;
}

}  // namespace p1n
