#include <cmath>
#include <sstream>

#include "doctest.h"

#include "p1n/errors.hpp"
#include "p1n/realization.hpp"
#include "p1n/spectrum.hpp"

using namespace p1n;

namespace {

// Product gaussian: wide in the three spatial axes, sharp in the fourth
// (the mass-defining axis), centered at p4 = c4.
GridWavefunction mass_peak_state(const MomentumGrid& grid, double c4, double s4,
                                 double s_perp) {
    GridWavefunction psi = make_wavefunction(grid, 1);
    for (std::size_t site = 0; site < grid.total_sites(); ++site) {
        const auto p = psi.momentum(site);
        double expo = (p[3] - c4) * (p[3] - c4) / (2.0 * s4 * s4);
        for (int a = 0; a < 3; ++a) {
            expo += p[a] * p[a] / (2.0 * s_perp * s_perp);
        }
        psi.at(site, 0) = std::exp(-expo);
    }
    return psi;
}

}  // namespace

TEST_SUITE("spectrum") {

TEST_CASE("sharp fourth-axis gaussian peaks in the right mass bin") {
    const MomentumGrid grid = make_grid(4, 32, 6.0);
    const GridWavefunction psi = mass_peak_state(grid, 2.0, 0.2, 1.0);
    const MassDistribution dist = mass_distribution(psi, 1.0, 16);

    // m^2 = p4^2 + kappa^2 ranges over [1, 37); the state is centered at
    // m^2 = 5, inside bin 1 = [3.25, 5.5).
    CHECK(dist.m_sq_lo == doctest::Approx(1.0));
    CHECK(dist.m_sq_hi == doctest::Approx(37.0));
    const MassDiagnostics diag = mass_diagnostics(dist);
    CHECK(diag.peak_bin == 1);
    CHECK(diag.peak_m_sq == doctest::Approx(4.375));
    CHECK(diag.fwhm > 0.0);
}

TEST_CASE("binned mass equals counted mass to rounding") {
    const MomentumGrid grid = make_grid(4, 16, 6.0);
    const GridWavefunction psi = mass_peak_state(grid, 2.0, 0.7, 1.2);
    const MassDistribution dist = mass_distribution(psi, 1.0, 12);
    CHECK(std::abs(dist.binned_mass - dist.counted_mass) <= 1e-12 * dist.counted_mass);
    CHECK(dist.counted_mass > 0.0);

    // Density integrates back to the binned mass: sum rho * width = mass.
    const double width = (dist.m_sq_hi - dist.m_sq_lo) / double(dist.bins);
    double integral = 0.0;
    for (double r : dist.total) {
        integral += r * width;
    }
    CHECK(integral == doctest::Approx(dist.binned_mass).epsilon(1e-12));
}

TEST_CASE("negative-branch folding adds the mirror sites") {
    const MomentumGrid grid = make_grid(4, 16, 6.0);
    const GridWavefunction psi = mass_peak_state(grid, 2.0, 0.5, 1.0);

    MassOptions fold;
    fold.fold_negative = true;
    const MassDistribution positive = mass_distribution(psi, 1.0, 8);
    const MassDistribution both = mass_distribution(psi, 1.0, 8, fold);
    // The state lives on the positive branch; folding may only add the
    // (tiny) negative-branch tail.
    CHECK(both.counted_mass >= positive.counted_mass);

    // A p4-symmetric state doubles its counted mass up to the p4 = 0 sheet:
    // folded = 2 * positive - (p4 = 0 sheet), since every p4 > 0 site has an
    // equal-weight mirror (the unpaired p4 = -L edge is empty here).
    const GridWavefunction sym = mass_peak_state(grid, 0.0, 0.9, 1.0);
    const MassDistribution sym_pos = mass_distribution(sym, 1.0, 8);
    const MassDistribution sym_both = mass_distribution(sym, 1.0, 8, fold);
    double sheet = 0.0;
    for (std::size_t site = 0; site < grid.total_sites(); ++site) {
        if (sym.momentum(site)[3] == 0.0) {
            sheet += std::norm(sym.at(site, 0)) * grid.cell_volume();
        }
    }
    CHECK(sym_both.counted_mass ==
          doctest::Approx(2.0 * sym_pos.counted_mass - sheet).epsilon(1e-10));
}

TEST_CASE("four-spinor states split into labeled channels") {
    const MomentumGrid grid = make_grid(4, 8, 6.0);
    GridWavefunction psi = make_wavefunction(grid, 4);
    for (std::size_t site = 0; site < grid.total_sites(); ++site) {
        const auto p = psi.momentum(site);
        double expo = 0.0;
        for (int a = 0; a < 4; ++a) {
            expo += p[a] * p[a] / 8.0;
        }
        const double g = std::exp(-expo);
        for (std::size_t s = 0; s < 4; ++s) {
            psi.at(site, s) = g * double(s + 1);
        }
    }
    const MassDistribution dist = mass_distribution(psi, 1.0, 4);
    REQUIRE(dist.channels.size() == 4);
    CHECK(dist.channels[0].s3 == doctest::Approx(0.5));
    CHECK(dist.channels[0].t3 == doctest::Approx(0.0));
    CHECK(dist.channels[1].s3 == doctest::Approx(-0.5));
    CHECK(dist.channels[2].t3 == doctest::Approx(0.5));
    CHECK(dist.channels[3].t3 == doctest::Approx(-0.5));

    // Component weights 1:2:3:4 appear squared in the densities.
    for (std::size_t b = 0; b < dist.bins; ++b) {
        if (dist.channels[0].rho[b] > 0.0) {
            CHECK(dist.channels[1].rho[b] ==
                  doctest::Approx(4.0 * dist.channels[0].rho[b]).epsilon(1e-12));
            CHECK(dist.channels[3].rho[b] ==
                  doctest::Approx(16.0 * dist.channels[0].rho[b]).epsilon(1e-12));
        }
    }

    // Unsupported spin dimensions are rejected.
    const GridWavefunction bad = make_wavefunction(grid, 3);
    CHECK_THROWS_AS((void)mass_distribution(bad, 1.0, 4), contract_error);
}

TEST_CASE("distribution is invariant under the scalar evolution") {
    const MomentumGrid grid = make_grid(4, 16, 6.0);
    StateFile state;
    state.psi = mass_peak_state(grid, 2.0, 0.4, 1.0);
    state.orbit_class = 1;
    state.mass_parameter = 1.0;

    const MassDistribution before = mass_distribution(state.psi, 1.0, 16);
    const GridWavefunction evolved = evolve(state, 1.7, EvolutionKind::irreducible_p0);
    const MassDistribution after = mass_distribution(evolved, 1.0, 16);
    double worst = 0.0;
    for (std::size_t b = 0; b < 16; ++b) {
        worst = std::max(worst, std::abs(after.total[b] - before.total[b]));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("mass-shell identity holds exactly and numerically") {
    const MomentumGrid grid = make_grid(4, 8, 6.0);
    const RelationReport report = dispersion_check(grid, 1.0);
    REQUIRE(report.items.size() == 2);
    CHECK(report.items[0].name == "mass_shell_exact");
    CHECK(report.items[1].name == "mass_shell_numeric");
    CHECK(report.pass());
}

TEST_CASE("CSV rendering is schema-stable") {
    const MomentumGrid grid = make_grid(4, 8, 2.0);
    const GridWavefunction psi = mass_peak_state(grid, 0.5, 0.5, 1.0);
    const MassDistribution dist = mass_distribution(psi, 1.0, 2);
    const std::string csv = mass_distribution_csv(dist);

    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "m_sq,s3,t3,rho");
    std::size_t rows = 0;
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty()) ++rows;
    }
    CHECK(rows == 2);  // bins x channels = 2 x 1
}

TEST_CASE("non-four-axis grids are rejected") {
    const MomentumGrid grid = make_grid(3, 8, 2.0);
    const GridWavefunction psi = make_wavefunction(grid, 1);
    CHECK_THROWS_AS((void)mass_distribution(psi, 1.0, 4), contract_error);
    CHECK_THROWS_AS((void)mass_distribution(mass_peak_state(make_grid(4, 8, 2.0), 0, 1, 1),
                                            1.0, 0),
                    contract_error);
}

}  // TEST_SUITE
