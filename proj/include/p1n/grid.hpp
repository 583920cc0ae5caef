#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "p1n/numeric.hpp"

namespace p1n {

/// Uniform periodic momentum grid over [-L, L)^n: axis coordinate
/// p_i = -L + 2L i / N. The per-axis point count must be a power of two
/// >= 8, n must be 1..4, and the total site count is capped at 2^24.
struct MomentumGrid {
    std::size_t n = 0;
    std::size_t points = 0;
    double extent = 0.0;

    double coord(std::size_t i) const { return -extent + 2.0 * extent * double(i) / double(points); }
    double spacing() const { return 2.0 * extent / double(points); }
    std::size_t total_sites() const;
    double cell_volume() const;

    bool operator==(const MomentumGrid&) const = default;
};

MomentumGrid make_grid(std::size_t n, std::size_t points, double extent);

/// Complex amplitudes over grid sites with an internal spin index; layout is
/// row-major in the axis indices (axis 0 slowest) with spin fastest:
/// values[site * spin_dim + s].
struct GridWavefunction {
    MomentumGrid grid;
    std::size_t spin_dim = 1;
    std::vector<cdouble> values;

    cdouble& at(std::size_t site, std::size_t s) { return values[site * spin_dim + s]; }
    const cdouble& at(std::size_t site, std::size_t s) const {
        return values[site * spin_dim + s];
    }

    /// Momentum components of a flat site index (axes beyond n are zero).
    std::array<double, 4> momentum(std::size_t site) const;

    double norm() const;  // plain l2 over all stored amplitudes
};

GridWavefunction make_wavefunction(const MomentumGrid& grid, std::size_t spin_dim);

GridWavefunction operator+(const GridWavefunction& a, const GridWavefunction& b);
GridWavefunction operator-(const GridWavefunction& a, const GridWavefunction& b);
GridWavefunction scaled(const GridWavefunction& a, cdouble s);

/// Pointwise multiplication by a scalar function of momentum (acts as the
/// identity on spin).
GridWavefunction apply_multiplier(const GridWavefunction& psi,
                                  const std::function<cdouble(const std::array<double, 4>&)>& f);

/// Apply a spin_dim x spin_dim matrix at every site.
GridWavefunction apply_spin_matrix(const GridWavefunction& psi, const NumericMatrix& M);

/// Spectral position operator i d/dp along one axis (0-based, < n):
/// forward DFT along the axis, multiply mode j by -pi j'/L with j' the
/// signed wrap (Nyquist mode zeroed), inverse DFT. Exact for trigonometric
/// polynomials below the Nyquist frequency.
GridWavefunction position_apply(const GridWavefunction& psi, std::size_t axis);

/// A wavefunction plus the physical context needed to reuse it across
/// runs: which operator realization it belongs to (orbit_class 1 or 3) and
/// that realization's mass parameter.
struct StateFile {
    GridWavefunction psi;
    std::uint64_t orbit_class = 1;
    double mass_parameter = 0.0;
};

/// Fixed 48-byte little-endian header (n, points, extent, spin_dim,
/// orbit_class, mass_parameter as u64/u64/f64/u64/u64/f64) followed by the
/// raw complex-double amplitudes in storage order.
void save_state(const std::string& path, const StateFile& state);
StateFile load_state(const std::string& path);

}  // namespace p1n
