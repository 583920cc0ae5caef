#include "p1n/spectrum.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "p1n/clifford.hpp"
#include "p1n/errors.hpp"
#include "p1n/exact.hpp"

namespace p1n {

namespace {

void require_kappa(double kappa) {
    if (!std::isfinite(kappa) || kappa <= 0.0) {
        throw contract_error("mass parameter must be positive and finite");
    }
}

/// Diagonal spin/isospin projection values per spin slot for the
/// four-component case, taken from the exact commuting-triple split of the
/// four-dimensional gamma set.
std::vector<std::pair<double, double>> four_spinor_channels() {
    const GammaSet gamma = build_gamma_5d();
    const SpinIsospinPair split = spin_isospin_split(spin_tensor(gamma));
    std::vector<std::pair<double, double>> out;
    for (std::size_t s = 0; s < 4; ++s) {
        const ExactScalar sv = split.S[2].at(s, s);
        const ExactScalar tv = split.T[2].at(s, s);
        const auto to_double = [](const ExactScalar& v) {
            return double(Rational(v.re).convert_to<double>());
        };
        out.emplace_back(to_double(sv), to_double(tv));
    }
    return out;
}

std::string half_decimal(double v) {
    if (v == 0.0) {
        return "0";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

}  // namespace

MassDistribution mass_distribution(const GridWavefunction& psi, double kappa, std::size_t bins,
                                   const MassOptions& options) {
    require_kappa(kappa);
    if (psi.grid.n != 4) {
        throw contract_error("mass distribution is defined on four-axis grids");
    }
    if (bins == 0) {
        throw contract_error("bin count must be positive");
    }
    if (psi.spin_dim != 1 && psi.spin_dim != 4) {
        throw contract_error(
            "mass channels need diagonal spin projections (spin dimension 1 or 4)");
    }

    MassDistribution dist;
    dist.kappa = kappa;
    dist.bins = bins;
    const double L = psi.grid.extent;
    dist.m_sq_lo = kappa * kappa;
    dist.m_sq_hi = kappa * kappa + L * L;
    const double width = (dist.m_sq_hi - dist.m_sq_lo) / double(bins);
    for (std::size_t b = 0; b < bins; ++b) {
        dist.bin_mid.push_back(dist.m_sq_lo + (double(b) + 0.5) * width);
    }
    if (psi.spin_dim == 1) {
        dist.channels.push_back({0.0, 0.0, std::vector<double>(bins, 0.0)});
    } else {
        for (const auto& [s3, t3] : four_spinor_channels()) {
            dist.channels.push_back({s3, t3, std::vector<double>(bins, 0.0)});
        }
    }

    const double vol = psi.grid.cell_volume();
    const std::size_t sites = psi.grid.total_sites();
    for (std::size_t site = 0; site < sites; ++site) {
        const std::array<double, 4> p = psi.momentum(site);
        if (p[3] < 0.0 && !options.fold_negative) {
            continue;
        }
        const double m_sq = p[3] * p[3] + kappa * kappa;
        // Uniform binning; the top edge folds into the last bin so the
        // cover is exact.
        std::size_t b = std::size_t((m_sq - dist.m_sq_lo) / width);
        if (b >= bins) {
            b = bins - 1;
        }
        for (std::size_t s = 0; s < psi.spin_dim; ++s) {
            const double mass = std::norm(psi.at(site, s)) * vol;
            dist.channels[s].rho[b] += mass;
            dist.counted_mass += mass;
        }
    }
    dist.total.assign(bins, 0.0);
    for (std::size_t b = 0; b < bins; ++b) {
        for (auto& ch : dist.channels) {
            dist.binned_mass += ch.rho[b];
        }
    }
    // Convert accumulated bin masses to densities in m^2.
    for (auto& ch : dist.channels) {
        for (std::size_t b = 0; b < bins; ++b) {
            ch.rho[b] /= width;
            dist.total[b] += ch.rho[b];
        }
    }
    return dist;
}

MassDiagnostics mass_diagnostics(const MassDistribution& dist) {
    MassDiagnostics diag;
    for (std::size_t b = 0; b < dist.bins; ++b) {
        if (dist.total[b] > diag.peak_rho) {
            diag.peak_rho = dist.total[b];
            diag.peak_bin = b;
        }
    }
    diag.peak_m_sq = dist.bin_mid[diag.peak_bin];
    if (diag.peak_rho <= 0.0) {
        return diag;
    }
    const double half = diag.peak_rho / 2.0;
    const double width = (dist.m_sq_hi - dist.m_sq_lo) / double(dist.bins);
    // Walk outwards from the peak to the half-maximum crossings, linearly
    // interpolated between bin midpoints; clamp at the range edges.
    double left = dist.m_sq_lo;
    for (std::size_t b = diag.peak_bin; b-- > 0;) {
        if (dist.total[b] <= half) {
            const double frac = (half - dist.total[b]) / (dist.total[b + 1] - dist.total[b]);
            left = dist.bin_mid[b] + frac * width;
            break;
        }
    }
    double right = dist.m_sq_hi;
    for (std::size_t b = diag.peak_bin + 1; b < dist.bins; ++b) {
        if (dist.total[b] <= half) {
            const double frac = (dist.total[b - 1] - half) / (dist.total[b - 1] - dist.total[b]);
            right = dist.bin_mid[b - 1] + frac * width;
            break;
        }
    }
    diag.fwhm = right - left;
    return diag;
}

RelationReport dispersion_check(const MomentumGrid& grid, double kappa) {
    require_kappa(kappa);
    if (grid.n != 4) {
        throw contract_error("mass-shell check is defined on four-axis grids");
    }

    RelationReport report;
    // Exact rational identity (p^2 + k^2) - p1^2 - p2^2 - p3^2 = p4^2 + k^2
    // at sample momenta: the energy square is assembled the same way the
    // multiplier assembles it, so this pins the wiring, not just algebra.
    bool exact_ok = true;
    const std::vector<std::array<Rational, 4>> samples = {
        {Rational(0), Rational(0), Rational(0), Rational(0)},
        {Rational(1), Rational(-2), Rational(3, 2), Rational(7, 4)},
        {Rational(-5, 3), Rational(1, 7), Rational(0), Rational(9, 2)},
    };
    const Rational ksq = Rational(20250816, 1000000) * Rational(20250816, 1000000);
    for (const auto& p : samples) {
        Rational energy_sq = ksq;
        for (const Rational& c : p) {
            energy_sq += c * c;
        }
        Rational rest = energy_sq;
        for (std::size_t k = 0; k < 3; ++k) {
            rest -= p[k] * p[k];
        }
        if (rest != p[3] * p[3] + ksq) {
            exact_ok = false;
        }
    }
    report.add_exact("mass_shell_exact", exact_ok);

    double worst = 0.0;
    const std::size_t sites = grid.total_sites();
    GridWavefunction probe = make_wavefunction(grid, 1);  // index helper only
    for (std::size_t site = 0; site < sites; ++site) {
        const std::array<double, 4> p = probe.momentum(site);
        double esq = kappa * kappa;
        for (double c : p) {
            esq += c * c;
        }
        const double energy = std::sqrt(esq);
        const double rest = energy * energy - p[0] * p[0] - p[1] * p[1] - p[2] * p[2];
        const double scale = std::max(1.0, esq);
        worst = std::max(worst, std::abs(rest - (p[3] * p[3] + kappa * kappa)) / scale);
    }
    report.add_numeric("mass_shell_numeric", worst, 1e-12);
    return report;
}

std::string mass_distribution_csv(const MassDistribution& dist) {
    std::string out = "m_sq,s3,t3,rho\n";
    char buf[96];
    for (std::size_t b = 0; b < dist.bins; ++b) {
        for (const auto& ch : dist.channels) {
            std::snprintf(buf, sizeof(buf), "%.17g,%s,%s,%.17g\n", dist.bin_mid[b],
                          half_decimal(ch.s3).c_str(), half_decimal(ch.t3).c_str(), ch.rho[b]);
            out += buf;
        }
    }
    return out;
}

void write_mass_distribution_csv(const std::string& path, const MassDistribution& dist) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw construction_error("cannot open csv output: " + path);
    }
    out << mass_distribution_csv(dist);
    if (!out) {
        throw construction_error("failed writing csv output: " + path);
    }
}

}  // namespace p1n
