#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "p1n/clifford.hpp"
#include "p1n/exact.hpp"
#include "p1n/numeric.hpp"
#include "p1n/report.hpp"

namespace p1n {

/// Five Hermitian matrices obeying the trilinear relation
/// m_u m_v m_l + m_l m_v m_u = d_uv m_l + d_lv m_u (all-plus metric,
/// labels 1..5); all 125 index triples are verified exactly on construction.
struct BetaSet {
    MetricSignature metric;
    std::vector<ExactMatrix> matrices;
    std::size_t dim = 0;

    const ExactMatrix& by_label(int label) const;
};

/// One nonzero matrix entry as stored in the plain-text table:
/// (matrix label, 1-based row, 1-based col, value in {+1, -1}).
struct MatrixEntry {
    int matrix;
    int row;
    int col;
    int value;

    bool operator==(const MatrixEntry&) const = default;
};

/// The 6x6 set: (m_u)_{u,6} = (m_u)_{6,u} = 1, all other entries zero.
BetaSet build_beta6();

/// The 15x15 set from the frozen entry table (40 signed unit entries).
BetaSet build_beta15();

/// The frozen entry table behind build_beta15, in (matrix, row, col) order.
const std::vector<MatrixEntry>& beta15_entries();

/// The trusted subset of the printed 15x15 table: matrices 1, 2, 4, 5 in
/// full plus the readable entries of matrix 3 (Hermitian mirrors included).
/// The remaining printed cells of matrix 3 are garbled (an index exceeds
/// the matrix size, and two cells mix unrelated pairs), so matrix 3 is one
/// symmetric +-1 pair short of complete.
const std::vector<MatrixEntry>& beta15_trusted_entries();

/// Exhaustive completion search for the garbled cells: try every symmetric
/// +-1 pair (r, c) with r in 1..10, c in 11..15 on top of the trusted
/// entries of matrix 3 and keep the candidates for which all 125 trilinear
/// triples hold. Deterministic order: row ascending, col ascending, +1
/// before -1. Each returned entry has matrix = 3 and r < c (the mirror is
/// implied).
std::vector<MatrixEntry> beta15_completion_search();

/// Rebuild the 15x15 set from the trusted table entries by running
/// beta15_completion_search and applying the first (lexicographically
/// smallest) passing completion; also verifies the squared fifth matrix is
/// diag(1 x4, 0 x6, 1 x4, 0). Throws construction_error naming a violating
/// triple if no completion passes.
BetaSet repair_beta15();

/// Parse "matrix row col value" lines ('#' comments and blank lines
/// skipped); values must be +-1 and indices 1-based.
std::vector<MatrixEntry> load_matrix_entries(std::istream& in);
std::vector<MatrixEntry> load_matrix_entries_file(const std::string& path);

/// Assemble a BetaSet of the given dimension from entry quadruples
/// (construction verification included).
BetaSet beta_set_from_entries(const std::vector<MatrixEntry>& entries, std::size_t dim);

/// Exact per-triple check of m_u m_v m_l + m_l m_v m_u = d_uv m_l + d_lv m_u
/// over all 125 (u, v, l).
RelationReport verify_kdp(const BetaSet& set);

/// S_uv = i (m_u m_v - m_v m_u) for all pairs u < v in 1..5; each component
/// is Hermitian exactly.
SpinTensor kdp_spin_tensor(const BetaSet& set);

/// The commuting spin/isospin triples carried by the 1..4 components of the
/// trilinear set's tensor. The tensor closes with the opposite orientation
/// to the quarter-bracket convention, so the split is applied to the negated
/// components; the su(2) invariants are verified exactly on construction.
SpinIsospinPair kdp_spin_isospin_split(const BetaSet& set);

/// H = sum_k S_5k p_k + m_5 kappa at a fixed real momentum, with
/// S_5k = i (m_5 m_k - m_k m_5); Hermitian by construction.
struct KdpHamiltonian {
    NumericMatrix H;
    std::array<double, 4> p{};
    double kappa = 0.0;
};

KdpHamiltonian kdp_hamiltonian(const BetaSet& set, const std::array<double, 4>& p, double kappa);

/// Exact-arithmetic Hamiltonian at rational momentum components.
ExactMatrix kdp_hamiltonian_exact(const BetaSet& set, const std::array<Rational, 4>& p,
                                  const Rational& kappa);

/// Exact spectral consequences of H^2 - (sum p_k^2) P = kappa^2 m_5^2 where
/// P projects onto the range of m_5^2, checked per random rational
/// (momentum, kappa) trial: H Hermitian; H^3 = (sum p_k^2 + kappa^2) H
/// (pins every nonzero eigenvalue of H^2 to the dispersion value);
/// trace H = 0; trace H^2 = rank(m_5^2) * (sum p_k^2 + kappa^2) (pins the
/// multiplicity); plus the rest-frame identity H(0)^2 = kappa^2 m_5^2.
/// Deterministic for a fixed seed.
RelationReport psquared_check(const BetaSet& set, int trials, unsigned seed = 20250816u);

/// Exact check of -i [m_u, S_rs] = d_ur m_s - d_us m_r over all 125 ordered
/// (u, r, s) triples; this is the transformation law making the five-matrix
/// vector covariant under the rotations generated by the tensor.
RelationReport covariance_check(const BetaSet& set);

}  // namespace p1n
