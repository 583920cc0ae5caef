#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "p1n/grid.hpp"
#include "p1n/numeric.hpp"
#include "p1n/report.hpp"

namespace p1n {

/// Which momentum-squared orbit the realization lives on: timelike
/// (P.P = +mass^2, energy sqrt(p^2 + mass^2)) or spacelike
/// (P.P = -mass^2, energy sqrt(p^2 - mass^2) on the exterior region).
/// Values double as the on-disk orbit tags.
enum class OrbitClass : std::uint64_t { timelike = 1, spacelike = 3 };

OrbitClass orbit_class_from_tag(std::uint64_t tag);

/// Internal spin content: scalar (dimension 1) or the lowest nontrivial
/// spinor representation for the relevant little group.
enum class SpinChoice { scalar, spinor };

/// Antisymmetric numeric spin components S_{mu nu} over a small index set
/// (0 = time); stored for mu < nu, zero when absent.
class LittleSpin {
public:
    explicit LittleSpin(std::size_t dim = 1) : dim_(dim) {}

    void set(int mu, int nu, const NumericMatrix& M);
    bool has(int mu, int nu) const;
    /// Sign-resolved lookup; absent pairs return the zero matrix.
    NumericMatrix component(int mu, int nu) const;
    std::size_t dim() const { return dim_; }
    const std::map<std::pair<int, int>, NumericMatrix>& stored() const { return comp_; }

private:
    std::size_t dim_;
    std::map<std::pair<int, int>, NumericMatrix> comp_;
};

/// Lowest spinor components for spatial rotations, indices 1..n:
/// n = 2 -> S_12 = sigma_3/2; n = 3 -> S_kl = eps_klm sigma_m/2;
/// n = 4 -> the quarter-bracket tensor of the four-dimensional gamma set.
/// n = 1 has no rotations (empty tensor of dimension 1).
LittleSpin rotation_spin_lowest(std::size_t n);

/// Lowest spinor components for the stabilizer of a spacelike direction,
/// indices 0..n-1 (non-unitary boosts): n = 2 -> S_01 = sigma_3/2;
/// n = 3 -> S_12 = sigma_3/2, S_01 = i sigma_1/2, S_02 = i sigma_2/2;
/// n = 4 -> quarter-bracket tensor of the gamma set, indices 0..3.
LittleSpin boost_spin_lowest(std::size_t n);

/// One generator: how it acts on a wavefunction, plus its explicit
/// dependence on the evolution parameter (the mixed time-space generators
/// carry an x0 p_k term whose parameter derivative is the momentum
/// multiplier; everything else is parameter-free).
struct Generator {
    std::string name;
    std::function<GridWavefunction(const GridWavefunction&)> apply;
    /// Null when the generator does not depend on the evolution parameter.
    std::function<GridWavefunction(const GridWavefunction&)> x0_derivative;
    bool pointwise_multiplier = false;
};

/// A full set of momentum, rotation, and boost generators realized on a
/// momentum grid. Translations are pointwise multipliers; position
/// operators act spectrally.
struct GeneratorSet {
    OrbitClass orbit_class = OrbitClass::timelike;
    MomentumGrid grid;
    std::size_t n = 0;
    std::size_t spin_dim = 1;
    double mass = 0.0;  // kappa on the timelike orbit, eta on the spacelike one
    double x0 = 0.0;
    LittleSpin spin;
    std::vector<Generator> generators;

    const Generator& by_name(const std::string& name) const;
    /// Translation P_mu (labels 0..n).
    GridWavefunction apply_p(int mu, const GridWavefunction& psi) const;
    /// Tensor generator J_{mu nu} with antisymmetry resolved (labels 0..n).
    GridWavefunction apply_j(int mu, int nu, const GridWavefunction& psi) const;
};

struct Class1Options {
    /// Sign of the spin-orbit term in the mixed generators; +1 is the
    /// correct realization, -1 is a deliberate mutation for sensitivity
    /// checks.
    int spin_coupling_sign = 1;
    double x0 = 0.0;
};

struct Class3Options {
    double x0 = 0.0;
};

/// Timelike-orbit realization: P_0 = sqrt(p^2 + mass^2) (positive energy
/// branch), P_k = p_k, rotations x_[k p_l] + S_kl, mixed generators
/// x0 p_k - (x_k P_0 + P_0 x_k)/2 - S_kl p_l / (P_0 + mass).
GeneratorSet build_class1(const MomentumGrid& grid, double mass, SpinChoice spin,
                          const Class1Options& options = {});

/// Spacelike-orbit realization (exterior region |p| > mass): P_0 =
/// sqrt(p^2 - mass^2), rotations among the first n-1 axes carry S_ab, the
/// distinguished axis n enters through x_[a p_n] - (S_ab p_b - S_a0 P_0) /
/// (p_n + mass), and the mixed generators are x0 p_a - (x_a P_0 +
/// P_0 x_a)/2 + S_0a and x0 p_n - (x_n P_0 + P_0 x_n)/2 - S_0a p_a /
/// (p_n + mass).
GeneratorSet build_class3(const MomentumGrid& grid, double mass, SpinChoice spin,
                          const Class3Options& options = {});

/// Spacelike-orbit states must vanish (relative amplitude 1e-10) within
/// four grid spacings of the sphere |p| = mass and of the plane
/// p_n = -mass; throws std::domain_error otherwise.
void check_spacelike_support(const GridWavefunction& psi, double mass);

/// Residuals of the full commutation table on a test state: translations
/// commute, -i[P_mu, J_rho sigma] = g_mu-rho P_sigma - g_mu-sigma P_rho,
/// and the tensor-tensor bracket, every pair enumerated once. Residuals
/// are ratios |(LHS - RHS) psi| / |psi|.
RelationReport commutator_residuals(const GeneratorSet& set, const GridWavefunction& psi,
                                    double tolerance);

/// Residual of i dQ/dx0 + [Q, P_0] applied to the state, per generator;
/// zero for a realization whose mixed generators are conserved.
RelationReport invariance_residuals(const GeneratorSet& set, const GridWavefunction& psi,
                                    double tolerance);

/// Deterministic seeded test state matching the realization's orbit:
/// timelike states are near-centered gaussians with axis widths drawn from
/// [max(L/16, 2.3 d), max(lo, min(L/6, 0.96 L/6.3))]; spacelike states are
/// narrow gaussians (widths in [3.5 d, 4.2 d]) pushed along a fixed
/// direction to radius max(mass + 4 d + 7 sigma_max, 0.54 L) so the
/// forbidden region stays empty (d = grid spacing). Spin weights are a
/// seeded unit vector.
GridWavefunction standard_test_state(const GeneratorSet& set, unsigned seed);

/// Closed-form time evolution applied pointwise in momentum space.
enum class EvolutionKind {
    irreducible_p0,  // scalar phase exp(-i P_0 t) on either orbit
    dirac,           // four-component timelike evolution, n = 4
    kdp              // trilinear-set evolution, spin dimension 6 or 15
};

EvolutionKind parse_evolution_kind(const std::string& name);
std::string evolution_kind_name(EvolutionKind kind);

GridWavefunction evolve(const StateFile& state, double time, EvolutionKind kind);

}  // namespace p1n
