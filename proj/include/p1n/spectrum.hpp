#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "p1n/grid.hpp"
#include "p1n/report.hpp"

namespace p1n {

/// One internal spin channel of the mass distribution, labeled by the
/// diagonal spin/isospin projections.
struct MassChannel {
    double s3 = 0.0;
    double t3 = 0.0;
    std::vector<double> rho;  // density per bin, mass / d(m^2)
};

/// Binned distribution of the invariant-mass-squared observable
/// m^2 = p_4^2 + kappa^2 over a four-axis momentum state. Bins are uniform
/// in m^2 from kappa^2 to kappa^2 + L^2 (L the grid extent); every counted
/// site lands in exactly one bin (last bin right-inclusive), so the summed
/// bin masses reproduce the counted state mass exactly.
struct MassDistribution {
    double kappa = 0.0;
    std::size_t bins = 0;
    double m_sq_lo = 0.0;
    double m_sq_hi = 0.0;
    std::vector<double> bin_mid;
    std::vector<MassChannel> channels;  // one channel (0,0), or the four
                                        // diagonal projections at spin 4
    std::vector<double> total;          // channel-summed density per bin
    double binned_mass = 0.0;           // sum over bins of bin mass
    double counted_mass = 0.0;          // direct sum over counted sites
};

struct MassOptions {
    /// Count only sites on the positive branch p_4 >= 0 (default); when
    /// true, fold the negative branch onto the same m^2 bins as well.
    bool fold_negative = false;
};

/// Bin |psi|^2 (cell volume included) by m^2 = p_4^2 + kappa^2. The grid
/// must have four axes; the spin dimension must be 1 or 4 (the four-spinor
/// case has diagonal projection matrices, so spin components are channels).
MassDistribution mass_distribution(const GridWavefunction& psi, double kappa, std::size_t bins,
                                   const MassOptions& options = {});

/// Peak location and interpolated full width at half maximum of the
/// channel-summed density.
struct MassDiagnostics {
    std::size_t peak_bin = 0;
    double peak_m_sq = 0.0;
    double peak_rho = 0.0;
    double fwhm = 0.0;
};

MassDiagnostics mass_diagnostics(const MassDistribution& dist);

/// Verify the mass-shell identity behind the observable: the timelike
/// energy multiplier satisfies P0^2 - p_1^2 - p_2^2 - p_3^2 = p_4^2 +
/// kappa^2. One item checks it in exact rational arithmetic on sample
/// momenta, one bounds the rounding over every grid site.
RelationReport dispersion_check(const MomentumGrid& grid, double kappa);

/// CSV rows "m_sq,s3,t3,rho", bins outer, channels inner; m_sq is the bin
/// midpoint and the projections print as decimal halves.
std::string mass_distribution_csv(const MassDistribution& dist);
void write_mass_distribution_csv(const std::string& path, const MassDistribution& dist);

}  // namespace p1n
