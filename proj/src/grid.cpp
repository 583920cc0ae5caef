#include "p1n/grid.hpp"

#include <fftw3.h>

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <map>
#include <memory>

#include "p1n/errors.hpp"

namespace p1n {

namespace {

constexpr std::size_t kMaxTotalSites = std::size_t{1} << 24;

static_assert(std::endian::native == std::endian::little,
              "state files are little-endian; serialization assumes a little-endian host");
static_assert(sizeof(cdouble) == 16, "amplitudes are stored as two packed doubles");

/// Cached in-place 1-D transform plans per line length. Plans are built
/// once per length with FFTW_ESTIMATE (deterministic output independent of
/// runtime measurement) and execute on the owned buffer.
struct LinePlans {
    fftw_complex* buffer = nullptr;
    fftw_plan forward = nullptr;
    fftw_plan backward = nullptr;

    explicit LinePlans(std::size_t n) {
        buffer = fftw_alloc_complex(n);
        if (buffer == nullptr) {
            throw resource_error("out of memory allocating transform buffer");
        }
        forward = fftw_plan_dft_1d(int(n), buffer, buffer, FFTW_FORWARD, FFTW_ESTIMATE);
        backward = fftw_plan_dft_1d(int(n), buffer, buffer, FFTW_BACKWARD, FFTW_ESTIMATE);
        if (forward == nullptr || backward == nullptr) {
            throw resource_error("failed to plan transform");
        }
    }
    LinePlans(const LinePlans&) = delete;
    LinePlans& operator=(const LinePlans&) = delete;
    ~LinePlans() {
        if (forward != nullptr) fftw_destroy_plan(forward);
        if (backward != nullptr) fftw_destroy_plan(backward);
        if (buffer != nullptr) fftw_free(buffer);
    }
};

LinePlans& plans_for(std::size_t n) {
    static std::map<std::size_t, std::unique_ptr<LinePlans>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, std::make_unique<LinePlans>(n)).first;
    }
    return *it->second;
}

void check_same_shape(const GridWavefunction& a, const GridWavefunction& b) {
    if (!(a.grid == b.grid) || a.spin_dim != b.spin_dim) {
        throw shape_error("wavefunction shapes differ");
    }
}

}  // namespace

std::size_t MomentumGrid::total_sites() const {
    std::size_t total = 1;
    for (std::size_t a = 0; a < n; ++a) {
        total *= points;
    }
    return total;
}

double MomentumGrid::cell_volume() const {
    double vol = 1.0;
    for (std::size_t a = 0; a < n; ++a) {
        vol *= spacing();
    }
    return vol;
}

MomentumGrid make_grid(std::size_t n, std::size_t points, double extent) {
    if (n < 1 || n > 4) {
        throw contract_error("grid dimension must be 1..4");
    }
    if (points < 8 || !std::has_single_bit(points)) {
        throw contract_error("points per axis must be a power of two >= 8");
    }
    if (!std::isfinite(extent) || extent <= 0.0) {
        throw contract_error("grid extent must be positive and finite");
    }
    MomentumGrid grid{n, points, extent};
    if (grid.total_sites() > kMaxTotalSites) {
        throw resource_error("grid exceeds the 2^24 total site budget");
    }
    return grid;
}

std::array<double, 4> GridWavefunction::momentum(std::size_t site) const {
    std::array<double, 4> p{};
    for (std::size_t a = grid.n; a-- > 0;) {
        p[a] = grid.coord(site % grid.points);
        site /= grid.points;
    }
    return p;
}

double GridWavefunction::norm() const {
    double sq = 0.0;
    for (const cdouble& v : values) {
        sq += std::norm(v);
    }
    return std::sqrt(sq);
}

GridWavefunction make_wavefunction(const MomentumGrid& grid, std::size_t spin_dim) {
    if (spin_dim == 0) {
        throw contract_error("spin dimension must be positive");
    }
    GridWavefunction psi;
    psi.grid = grid;
    psi.spin_dim = spin_dim;
    psi.values.assign(grid.total_sites() * spin_dim, cdouble(0.0));
    return psi;
}

GridWavefunction operator+(const GridWavefunction& a, const GridWavefunction& b) {
    check_same_shape(a, b);
    GridWavefunction out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        out.values[i] += b.values[i];
    }
    return out;
}

GridWavefunction operator-(const GridWavefunction& a, const GridWavefunction& b) {
    check_same_shape(a, b);
    GridWavefunction out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        out.values[i] -= b.values[i];
    }
    return out;
}

GridWavefunction scaled(const GridWavefunction& a, cdouble s) {
    GridWavefunction out = a;
    for (cdouble& v : out.values) {
        v *= s;
    }
    return out;
}

GridWavefunction apply_multiplier(
    const GridWavefunction& psi,
    const std::function<cdouble(const std::array<double, 4>&)>& f) {
    GridWavefunction out = psi;
    const std::size_t sites = psi.grid.total_sites();
    for (std::size_t site = 0; site < sites; ++site) {
        const cdouble w = f(psi.momentum(site));
        for (std::size_t s = 0; s < psi.spin_dim; ++s) {
            out.at(site, s) *= w;
        }
    }
    return out;
}

GridWavefunction apply_spin_matrix(const GridWavefunction& psi, const NumericMatrix& M) {
    if (M.rows() != psi.spin_dim || M.cols() != psi.spin_dim) {
        throw shape_error("spin matrix does not match the wavefunction's spin dimension");
    }
    GridWavefunction out = make_wavefunction(psi.grid, psi.spin_dim);
    const std::size_t sites = psi.grid.total_sites();
    for (std::size_t site = 0; site < sites; ++site) {
        for (std::size_t r = 0; r < psi.spin_dim; ++r) {
            cdouble acc = 0.0;
            for (std::size_t c = 0; c < psi.spin_dim; ++c) {
                acc += M.at(r, c) * psi.at(site, c);
            }
            out.at(site, r) = acc;
        }
    }
    return out;
}

GridWavefunction position_apply(const GridWavefunction& psi, std::size_t axis) {
    const MomentumGrid& grid = psi.grid;
    if (axis >= grid.n) {
        throw shape_error("position axis out of range");
    }
    const std::size_t N = grid.points;
    // Stride between consecutive points of one line along the axis, in
    // amplitude units (spin fastest, axis 0 slowest).
    std::size_t stride = psi.spin_dim;
    for (std::size_t a = grid.n - 1; a > axis; --a) {
        stride *= N;
    }
    const std::size_t block = stride * N;  // span of one full axis sweep
    const std::size_t total = psi.values.size();

    // Mode multipliers: -x_j with x_j = pi j'/L, signed wrap, Nyquist zeroed.
    std::vector<double> mode(N);
    for (std::size_t j = 0; j < N; ++j) {
        if (j == N / 2) {
            mode[j] = 0.0;
            continue;
        }
        const double wrapped = j < N / 2 ? double(j) : double(j) - double(N);
        mode[j] = -M_PI * wrapped / grid.extent;
    }

    LinePlans& plans = plans_for(N);
    GridWavefunction out = psi;
    const double inv_n = 1.0 / double(N);
    for (std::size_t base = 0; base < total; base += block) {
        for (std::size_t off = 0; off < stride; ++off) {
            cdouble* line0 = out.values.data() + base + off;
            for (std::size_t j = 0; j < N; ++j) {
                std::memcpy(plans.buffer + j, line0 + j * stride, sizeof(cdouble));
            }
            fftw_execute(plans.forward);
            for (std::size_t j = 0; j < N; ++j) {
                plans.buffer[j][0] *= mode[j];
                plans.buffer[j][1] *= mode[j];
            }
            fftw_execute(plans.backward);
            for (std::size_t j = 0; j < N; ++j) {
                cdouble v;
                std::memcpy(&v, plans.buffer + j, sizeof(cdouble));
                line0[j * stride] = v * inv_n;
            }
        }
    }
    return out;
}

void save_state(const std::string& path, const StateFile& state) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (f == nullptr) {
        throw construction_error("cannot open state file for writing: " + path);
    }
    const std::uint64_t header_ints[2] = {state.psi.grid.n, state.psi.grid.points};
    const double extent = state.psi.grid.extent;
    const std::uint64_t spin_and_class[2] = {state.psi.spin_dim, state.orbit_class};
    const double mass = state.mass_parameter;
    bool ok = std::fwrite(header_ints, sizeof(header_ints), 1, f) == 1 &&
              std::fwrite(&extent, sizeof(extent), 1, f) == 1 &&
              std::fwrite(spin_and_class, sizeof(spin_and_class), 1, f) == 1 &&
              std::fwrite(&mass, sizeof(mass), 1, f) == 1;
    ok = ok && std::fwrite(state.psi.values.data(), sizeof(cdouble), state.psi.values.size(),
                           f) == state.psi.values.size();
    if (std::fclose(f) != 0 || !ok) {
        throw construction_error("failed writing state file: " + path);
    }
}

StateFile load_state(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (f == nullptr) {
        throw construction_error("cannot open state file: " + path);
    }
    const auto fail = [&](const std::string& why) {
        std::fclose(f);
        throw construction_error("malformed state file " + path + ": " + why);
    };

    std::uint64_t header_ints[2] = {};
    double extent = 0.0;
    std::uint64_t spin_and_class[2] = {};
    double mass = 0.0;
    if (std::fread(header_ints, sizeof(header_ints), 1, f) != 1 ||
        std::fread(&extent, sizeof(extent), 1, f) != 1 ||
        std::fread(spin_and_class, sizeof(spin_and_class), 1, f) != 1 ||
        std::fread(&mass, sizeof(mass), 1, f) != 1) {
        fail("truncated header");
    }
    if (spin_and_class[1] != 1 && spin_and_class[1] != 3) {
        fail("orbit class must be 1 or 3");
    }
    if (spin_and_class[0] == 0 || spin_and_class[0] > 64) {
        fail("spin dimension out of range");
    }

    StateFile state;
    try {
        state.psi = make_wavefunction(
            make_grid(std::size_t(header_ints[0]), std::size_t(header_ints[1]), extent),
            std::size_t(spin_and_class[0]));
    } catch (const std::runtime_error& e) {
        fail(e.what());
    }
    state.orbit_class = spin_and_class[1];
    state.mass_parameter = mass;
    if (std::fread(state.psi.values.data(), sizeof(cdouble), state.psi.values.size(), f) !=
        state.psi.values.size()) {
        fail("truncated amplitude payload");
    }
    // Reject trailing garbage so size mismatches cannot pass silently.
    unsigned char extra = 0;
    if (std::fread(&extra, 1, 1, f) == 1) {
        fail("trailing bytes after amplitude payload");
    }
    std::fclose(f);
    return state;
}

}  // namespace p1n
