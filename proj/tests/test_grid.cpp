#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"

#include "p1n/errors.hpp"
#include "p1n/grid.hpp"

using namespace p1n;

namespace {

const char* kTmpState = "test_state_tmp.bin";

struct TmpFile {
    ~TmpFile() { std::remove(kTmpState); }
};

}  // namespace

TEST_SUITE("grid") {

TEST_CASE("grid geometry") {
    const MomentumGrid g = make_grid(3, 16, 5.0);
    CHECK(g.coord(0) == -5.0);
    CHECK(g.coord(8) == 0.0);
    CHECK(g.spacing() == doctest::Approx(0.625));
    CHECK(g.total_sites() == 4096);
    CHECK(g.cell_volume() == doctest::Approx(0.625 * 0.625 * 0.625));

    CHECK_THROWS_AS((void)make_grid(5, 16, 5.0), contract_error);
    CHECK_THROWS_AS((void)make_grid(2, 12, 5.0), contract_error);  // not a power of two
    CHECK_THROWS_AS((void)make_grid(2, 4, 5.0), contract_error);   // below the minimum
    CHECK_THROWS_AS((void)make_grid(4, 128, 5.0), resource_error); // 2^28 sites
}

TEST_CASE("site momentum decodes the row-major layout") {
    const MomentumGrid g = make_grid(2, 8, 4.0);
    GridWavefunction psi = make_wavefunction(g, 1);
    // site index = i0 * 8 + i1, axis 0 slowest.
    const std::size_t site = 3 * 8 + 5;
    const auto p = psi.momentum(site);
    CHECK(p[0] == doctest::Approx(-4.0 + 3.0));
    CHECK(p[1] == doctest::Approx(-4.0 + 5.0));
    CHECK(p[2] == 0.0);
    CHECK(p[3] == 0.0);
}

TEST_CASE("spectral position operator matches the analytic derivative") {
    // psi(p) = exp(-p^2 / 2 sigma^2): (x psi)(p) = i d psi / dp
    // = -i p / sigma^2 psi. The residual floor is the periodic wrap of the
    // box-edge tail, exp(-L^2 / 2 sigma^2) = 1.3e-14 here, amplified by a
    // small factor through the derivative.
    const MomentumGrid g = make_grid(1, 64, 8.0);
    GridWavefunction psi = make_wavefunction(g, 1);
    const double sigma = 1.0;
    for (std::size_t i = 0; i < 64; ++i) {
        const double p = g.coord(i);
        psi.at(i, 0) = std::exp(-p * p / (2.0 * sigma * sigma));
    }
    const GridWavefunction xpsi = position_apply(psi, 0);
    double worst = 0.0;
    for (std::size_t i = 0; i < 64; ++i) {
        const double p = g.coord(i);
        const cdouble expect = cdouble(0.0, -p / (sigma * sigma)) * psi.at(i, 0);
        worst = std::max(worst, std::abs(xpsi.at(i, 0) - expect));
    }
    CHECK(worst <= 1e-11);
}

TEST_CASE("plane waves are position eigenvectors below Nyquist") {
    // psi(p) = exp(-i x0 p) with x0 on the reciprocal lattice is an exact
    // eigenvector of the position operator with eigenvalue x0.
    const MomentumGrid g = make_grid(1, 32, 4.0);
    const double x0 = M_PI / g.extent * 3.0;  // reciprocal-lattice point 3
    GridWavefunction psi = make_wavefunction(g, 1);
    for (std::size_t i = 0; i < 32; ++i) {
        psi.at(i, 0) = std::exp(cdouble(0.0, -x0 * g.coord(i)));
    }
    const GridWavefunction xpsi = position_apply(psi, 0);
    double worst = 0.0;
    for (std::size_t i = 0; i < 32; ++i) {
        worst = std::max(worst, std::abs(xpsi.at(i, 0) - x0 * psi.at(i, 0)));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("position operators on different axes commute") {
    const MomentumGrid g = make_grid(2, 16, 3.0);
    GridWavefunction psi = make_wavefunction(g, 2);
    for (std::size_t site = 0; site < g.total_sites(); ++site) {
        const auto p = psi.momentum(site);
        const double e = std::exp(-(p[0] * p[0] + 0.5 * p[1] * p[1]));
        psi.at(site, 0) = e;
        psi.at(site, 1) = cdouble(0.0, 1.0) * e * p[0];
    }
    const GridWavefunction ab = position_apply(position_apply(psi, 0), 1);
    const GridWavefunction ba = position_apply(position_apply(psi, 1), 0);
    const GridWavefunction diff = ab - ba;
    CHECK(diff.norm() <= 1e-13 * psi.norm());
}

TEST_CASE("state files round-trip bit for bit") {
    const TmpFile cleanup;
    const MomentumGrid g = make_grid(2, 8, 2.5);
    StateFile state;
    state.psi = make_wavefunction(g, 4);
    state.orbit_class = 3;
    state.mass_parameter = 0.75;
    for (std::size_t k = 0; k < state.psi.values.size(); ++k) {
        state.psi.values[k] = cdouble(std::sin(0.1 * double(k)), std::cos(0.2 * double(k)));
    }
    save_state(kTmpState, state);

    const StateFile loaded = load_state(kTmpState);
    CHECK(loaded.psi.grid == g);
    CHECK(loaded.psi.spin_dim == 4);
    CHECK(loaded.orbit_class == 3);
    CHECK(loaded.mass_parameter == 0.75);
    CHECK(loaded.psi.values == state.psi.values);
}

TEST_CASE("state loading rejects malformed files") {
    const TmpFile cleanup;
    const MomentumGrid g = make_grid(1, 8, 1.0);
    StateFile state;
    state.psi = make_wavefunction(g, 1);
    state.psi.at(0, 0) = 1.0;
    state.orbit_class = 1;
    state.mass_parameter = 1.0;
    save_state(kTmpState, state);

    SUBCASE("trailing bytes") {
        std::ofstream out(kTmpState, std::ios::binary | std::ios::app);
        out.put('x');
        out.close();
        CHECK_THROWS_AS((void)load_state(kTmpState), construction_error);
    }
    SUBCASE("truncated payload") {
        std::ifstream in(kTmpState, std::ios::binary);
        std::string bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
        in.close();
        std::ofstream out(kTmpState, std::ios::binary | std::ios::trunc);
        out.write(bytes.data(), std::streamsize(bytes.size() - 8));
        out.close();
        CHECK_THROWS_AS((void)load_state(kTmpState), construction_error);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS((void)load_state("no_such_state_file.bin"), construction_error);
    }
}

TEST_CASE("multiplier and spin-matrix application") {
    const MomentumGrid g = make_grid(1, 8, 2.0);
    GridWavefunction psi = make_wavefunction(g, 2);
    for (std::size_t i = 0; i < 8; ++i) {
        psi.at(i, 0) = 1.0;
        psi.at(i, 1) = 2.0;
    }
    const GridWavefunction mult =
        apply_multiplier(psi, [](const std::array<double, 4>& p) { return cdouble(p[0]); });
    CHECK(mult.at(0, 0) == cdouble(-2.0));
    CHECK(mult.at(0, 1) == cdouble(-4.0));

    NumericMatrix swap(2, 2);
    swap.at(0, 1) = 1.0;
    swap.at(1, 0) = 1.0;
    const GridWavefunction swapped = apply_spin_matrix(psi, swap);
    CHECK(swapped.at(3, 0) == cdouble(2.0));
    CHECK(swapped.at(3, 1) == cdouble(1.0));
}

}  // TEST_SUITE
