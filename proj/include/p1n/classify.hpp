#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "p1n/exact.hpp"
#include "p1n/numeric.hpp"

namespace p1n {

/// The five wave equations the library ships matrix data for: the two
/// four-component equations (opposite mass-term signs), the eight-component
/// equation, and the two trilinear-algebra equations (6x6 and 15x15).
enum class Equation { dirac18a, dirac18b, dirac26, kdp6, kdp15 };

/// Stable lowercase identifier ("dirac18a", ..., "kdp15").
std::string equation_name(Equation eq);
/// Inverse of equation_name; nullopt for unknown names.
std::optional<Equation> parse_equation(const std::string& name);
/// All five equations in declaration order.
const std::array<Equation, 5>& all_equations();

/// Everything the classifier needs about one equation: the Hamiltonian as a
/// function of momentum, the commuting spin and isospin triples, the matrix
/// whose rest-frame eigenvalues give the sign of energy, and the mass
/// parameter. Dimensional consistency and rest-frame compatibility
/// ([H(0), S_a] = [H(0), T_a] = 0 within 1e-12) are verified when built
/// through build_equation_spec.
struct EquationSpec {
    std::string name;
    std::size_t dim = 0;
    double kappa = 0.0;
    std::function<NumericMatrix(const std::array<double, 4>&)> H_at;
    std::array<ExactMatrix, 3> S_ops;
    std::array<ExactMatrix, 3> T_ops;
    ExactMatrix energy_sign_op;
};

EquationSpec build_equation_spec(Equation eq, double kappa);

/// One group of equivalent irreducible blocks: energy sign, spin s and
/// isospin t stored as 2s and 2t (exact half-integers), and how many copies
/// occur. Sorted canonically (epsilon desc, s desc, t desc) inside
/// RepContent.
struct RepBlock {
    int epsilon = 0;
    int twice_s = 0;
    int twice_t = 0;
    int mult = 0;

    bool operator==(const RepBlock&) const = default;
};

/// A zero-energy (redundant-component) block: spins only.
struct RedundantBlock {
    int twice_s = 0;
    int twice_t = 0;
    int mult = 0;

    bool operator==(const RedundantBlock&) const = default;
};

/// The decomposition result: principal blocks with energy sign +-1 plus
/// redundant zero-energy blocks. Block dimensions always sum to `dim`.
struct RepContent {
    std::vector<RepBlock> blocks;
    std::vector<RedundantBlock> redundant;
    std::size_t dim = 0;

    bool operator==(const RepContent&) const = default;
    /// Human-readable form like "D+(1/2,0) (+) D-(0,1/2)".
    std::string str() const;
};

/// "0", "1/2", "1", "3/2", ... for a doubled half-integer.
std::string half_integer_str(int twice);

/// The numeric commuting family the classifier diagonalizes: rest-frame
/// Hamiltonian divided by kappa (eigenvalues in {-1, 0, +1}), the two
/// Casimir squares, and the two third components.
struct ClassifyOps {
    NumericMatrix energy;
    NumericMatrix S_sq;
    NumericMatrix T_sq;
    NumericMatrix S3;
    NumericMatrix T3;
};

/// Simultaneous eigenspace refinement of the commuting family. Eigenspaces
/// with energy +-1 become principal blocks, zero-energy ones become
/// redundant blocks; s and t are read off the Casimir eigenvalues s(s+1),
/// t(t+1). Throws contract_error if the family fails to commute within
/// 1e-10, classification_error if an eigenvalue is further than 1e-6 from
/// the admissible grid or block dimensions do not divide evenly.
RepContent classify_ops(const ClassifyOps& ops);

/// classify_ops on the spec's rest frame, after checking that H(0) equals
/// kappa times the energy-sign operator within 1e-12 (contract_error
/// otherwise).
RepContent classify(const EquationSpec& spec);

/// Convenience entry points for the two equations whose decompositions are
/// stated without derivation: the flipped-mass four-component equation and
/// the 6x6 trilinear equation (kappa = 1).
RepContent classify_dirac18b();
RepContent classify_kdp6();

/// True iff the principal blocks group into quadruples
/// D+(s,t) (+) D-(s,t) (+) D+(t,s) (+) D-(t,s) — the particle/antiparticle
/// symmetric pattern (for s = t the quadruple degenerates to a +/- pair).
bool is_ptc_pattern(const RepContent& content);

/// Canonical JSON: {"blocks":[{"epsilon":1,"s":"1/2","t":"0","mult":1},...],
/// "redundant":[{"s":...,"t":...,"mult":...},...]} with fixed key order and
/// exact fraction strings, suitable for golden-file comparison.
nlohmann::ordered_json rep_content_json(const RepContent& content);

}  // namespace p1n
