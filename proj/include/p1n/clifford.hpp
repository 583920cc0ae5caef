#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>

#include "p1n/exact.hpp"
#include "p1n/report.hpp"

namespace p1n {

/// An ordered set of mutually anticommuting matrices tied to a metric:
/// anticommutator(m[a], m[b]) = 2 g_ab I for all pairs (verified exactly on
/// construction). `designated_product` stores the distinguished product
/// matrix of the seven-matrix set so the product-constraint check is a pure
/// comparison.
struct GammaSet {
    MetricSignature metric;
    std::vector<ExactMatrix> matrices;
    std::size_t dim = 0;
    std::optional<ExactMatrix> designated_product;

    const ExactMatrix& by_label(int label) const;
};

/// Antisymmetric collection of Hermitian matrices indexed by ordered pairs;
/// component(l, k) = -component(k, l) and component(k, k) = 0.
class SpinTensor {
public:
    SpinTensor() = default;
    explicit SpinTensor(std::size_t dim) : dim_(dim) {}

    void set(int k, int l, ExactMatrix m);
    /// Component for any index order (antisymmetry applied automatically).
    ExactMatrix component(int k, int l) const;
    bool has(int k, int l) const;
    std::size_t dim() const { return dim_; }
    /// Sorted list of stored (k, l) pairs, k < l.
    std::vector<std::pair<int, int>> index_pairs() const;

private:
    std::size_t dim_ = 0;
    std::map<std::pair<int, int>, ExactMatrix> comp_;
};

/// The two commuting triples split out of a four-index spin tensor, with
/// their Casimir squares. Invariants ([S_a,S_b] = i S_c cyclic, [S_a,T_b]=0,
/// Casimirs central) are verified exactly on construction.
struct SpinIsospinPair {
    std::array<ExactMatrix, 3> S;
    std::array<ExactMatrix, 3> T;
    ExactMatrix S_sq;
    ExactMatrix T_sq;
};

/// The five 4x4 matrices (one timelike diagonal + four spacelike) for metric
/// (+,-,-,-,-), labels 0..4.
GammaSet build_gamma_5d();

/// The seven 8x8 block matrices for metric (+,-,-,-,-,-,-), labels 0..6,
/// carrying the designated product matrix for the product-constraint check.
GammaSet build_gamma_8d();

/// A Clifford set for metric (+, - x num_spatial) built by the standard
/// tensor-product recursion; dimension 2^ceil(num_spatial/2), timelike
/// matrix first and diagonal. Throws resource_error for num_spatial > 12
/// (matrix dimension cap 128).
GammaSet build_gamma_generic(int num_spatial);

/// Exact per-pair check of anticommutator(m_a, m_b) = 2 g_ab I.
RelationReport verify_clifford(const GammaSet& set);

struct ProductConstraintResult {
    bool holds_product_rule = false;       // timelike = product of the four spacelike
    bool holds_designated_product = false; // designated = -i * product of matrices 1..6
};

/// Exact product checks: a five-matrix set tests m0 = m1 m2 m3 m4; a
/// seven-matrix set tests that same relation on its first five matrices and
/// additionally designated = -i m1 m2 m3 m4 m5 m6. Throws shape_error for
/// other arities.
ProductConstraintResult check_product_constraint(const GammaSet& set);

/// S_kl = (i/4)(g_k g_l - g_l g_k) over all spatial label pairs k < l.
SpinTensor spin_tensor(const GammaSet& set);

/// Split a spatial four-index spin tensor into the two commuting triples:
/// S_a = 1/2 (S_bc + S_4a), T_a = 1/2 (S_bc - S_4a) with (a,b,c) cyclic in
/// (1,2,3). Throws shape_error if components for indices 1..4 are missing.
SpinIsospinPair spin_isospin_split(const SpinTensor& S);

}  // namespace p1n
