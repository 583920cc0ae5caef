#include "p1n/realization.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "p1n/clifford.hpp"
#include "p1n/errors.hpp"
#include "p1n/exact.hpp"
#include "p1n/kdp.hpp"

namespace p1n {

namespace {

constexpr double kSpinBracketTol = 1e-14;
constexpr double kSupportLevel = 1e-10;

double metric_g(int a, int b) {
    if (a != b) {
        return 0.0;
    }
    return a == 0 ? 1.0 : -1.0;
}

NumericMatrix num_sigma(int a) {
    NumericMatrix m(2, 2);
    switch (a) {
        case 1:
            m.at(0, 1) = 1.0;
            m.at(1, 0) = 1.0;
            break;
        case 2:
            m.at(0, 1) = cdouble(0.0, -1.0);
            m.at(1, 0) = cdouble(0.0, 1.0);
            break;
        case 3:
            m.at(0, 0) = 1.0;
            m.at(1, 1) = -1.0;
            break;
        default:
            throw contract_error("sigma index must be 1..3");
    }
    return m;
}

/// Quarter-bracket components of the four-dimensional gamma set over an
/// arbitrary label subset (the exact spin tensor only covers spatial
/// pairs, and the spacelike stabilizer needs the time label too).
NumericMatrix gamma_quarter_bracket(int mu, int nu) {
    const GammaSet set = build_gamma_5d();
    const ExactMatrix& a = set.by_label(mu);
    const ExactMatrix& b = set.by_label(nu);
    const ExactMatrix s = (a * b - b * a).scaled(ExactScalar::i() * ExactScalar::frac(1, 4));
    return to_numeric(s);
}

/// Check the tensor bracket -i[S_mn, S_rs] = g_ms S_nr + g_nr S_ms -
/// g_mr S_ns - g_ns S_mr over every index pair; components are exact
/// half-integer data, so the residual must vanish to rounding.
void verify_spin_brackets(const LittleSpin& spin, const std::vector<int>& indices) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        for (std::size_t j = i + 1; j < indices.size(); ++j) {
            pairs.emplace_back(indices[i], indices[j]);
        }
    }
    for (const auto& [m, n] : pairs) {
        for (const auto& [r, s] : pairs) {
            const NumericMatrix lhs =
                commutator(spin.component(m, n), spin.component(r, s)).scaled(cdouble(0, -1));
            NumericMatrix rhs(spin.dim(), spin.dim());
            rhs = rhs + spin.component(n, r).scaled(metric_g(m, s));
            rhs = rhs + spin.component(m, s).scaled(metric_g(n, r));
            rhs = rhs - spin.component(n, s).scaled(metric_g(m, r));
            rhs = rhs - spin.component(m, r).scaled(metric_g(n, s));
            if ((lhs - rhs).max_abs() > kSpinBracketTol) {
                throw contract_error("spin components fail the tensor bracket at (" +
                                     std::to_string(m) + "," + std::to_string(n) + ")x(" +
                                     std::to_string(r) + "," + std::to_string(s) + ")");
            }
        }
    }
}

std::function<GridWavefunction(const GridWavefunction&)> momentum_multiplier(int axis) {
    return [axis](const GridWavefunction& psi) {
        return apply_multiplier(psi,
                                [axis](const std::array<double, 4>& p) { return cdouble(p[axis]); });
    };
}

GridWavefunction apply_momentum(const GridWavefunction& psi, int axis) {
    return apply_multiplier(psi,
                            [axis](const std::array<double, 4>& p) { return cdouble(p[axis]); });
}

double energy_timelike(const std::array<double, 4>& p, double mass) {
    double sq = mass * mass;
    for (double c : p) {
        sq += c * c;
    }
    return std::sqrt(sq);
}

double energy_spacelike(const std::array<double, 4>& p, double mass) {
    double sq = -mass * mass;
    for (double c : p) {
        sq += c * c;
    }
    return std::sqrt(std::max(sq, 0.0));
}

void require_mass_parameter(double mass) {
    if (!std::isfinite(mass) || mass <= 0.0) {
        throw contract_error("orbit mass parameter must be positive and finite");
    }
}

std::string pair_name(const char* head, int mu, int nu) {
    return std::string(head) + std::to_string(mu) + std::to_string(nu);
}

}  // namespace

OrbitClass orbit_class_from_tag(std::uint64_t tag) {
    if (tag == 1) {
        return OrbitClass::timelike;
    }
    if (tag == 3) {
        return OrbitClass::spacelike;
    }
    throw contract_error("orbit class tag must be 1 or 3");
}

void LittleSpin::set(int mu, int nu, const NumericMatrix& M) {
    if (mu == nu) {
        throw contract_error("spin components are antisymmetric; equal indices are zero");
    }
    if (M.rows() != dim_ || M.cols() != dim_) {
        throw shape_error("spin component dimension mismatch");
    }
    if (mu < nu) {
        comp_.insert_or_assign({mu, nu}, M);
    } else {
        comp_.insert_or_assign({nu, mu}, M.scaled(-1.0));
    }
}

bool LittleSpin::has(int mu, int nu) const {
    return comp_.count({std::min(mu, nu), std::max(mu, nu)}) != 0;
}

NumericMatrix LittleSpin::component(int mu, int nu) const {
    const auto it = comp_.find({std::min(mu, nu), std::max(mu, nu)});
    if (it == comp_.end() || mu == nu) {
        return NumericMatrix(dim_, dim_);
    }
    return mu < nu ? it->second : it->second.scaled(-1.0);
}

LittleSpin rotation_spin_lowest(std::size_t n) {
    switch (n) {
        case 1:
            return LittleSpin(1);
        case 2: {
            LittleSpin spin(2);
            spin.set(1, 2, num_sigma(3).scaled(0.5));
            return spin;
        }
        case 3: {
            LittleSpin spin(2);
            spin.set(1, 2, num_sigma(3).scaled(0.5));
            spin.set(2, 3, num_sigma(1).scaled(0.5));
            spin.set(3, 1, num_sigma(2).scaled(0.5));
            return spin;
        }
        case 4: {
            LittleSpin spin(4);
            for (int k = 1; k <= 4; ++k) {
                for (int l = k + 1; l <= 4; ++l) {
                    spin.set(k, l, gamma_quarter_bracket(k, l));
                }
            }
            return spin;
        }
        default:
            throw contract_error("rotation spin components exist for n = 1..4");
    }
}

LittleSpin boost_spin_lowest(std::size_t n) {
    switch (n) {
        case 1:
            return LittleSpin(1);
        case 2: {
            LittleSpin spin(2);
            spin.set(0, 1, num_sigma(3).scaled(0.5));
            return spin;
        }
        case 3: {
            LittleSpin spin(2);
            spin.set(1, 2, num_sigma(3).scaled(0.5));
            spin.set(0, 1, num_sigma(1).scaled(cdouble(0.0, 0.5)));
            spin.set(0, 2, num_sigma(2).scaled(cdouble(0.0, 0.5)));
            return spin;
        }
        case 4: {
            LittleSpin spin(4);
            for (int mu = 0; mu <= 3; ++mu) {
                for (int nu = mu + 1; nu <= 3; ++nu) {
                    spin.set(mu, nu, gamma_quarter_bracket(mu, nu));
                }
            }
            return spin;
        }
        default:
            throw contract_error("stabilizer spin components exist for n = 1..4");
    }
}

const Generator& GeneratorSet::by_name(const std::string& name) const {
    for (const Generator& g : generators) {
        if (g.name == name) {
            return g;
        }
    }
    throw contract_error("no generator named " + name);
}

GridWavefunction GeneratorSet::apply_p(int mu, const GridWavefunction& psi) const {
    return by_name("P" + std::to_string(mu)).apply(psi);
}

GridWavefunction GeneratorSet::apply_j(int mu, int nu, const GridWavefunction& psi) const {
    if (mu == nu) {
        return make_wavefunction(psi.grid, psi.spin_dim);
    }
    if (mu < nu) {
        return by_name(pair_name("J", mu, nu)).apply(psi);
    }
    return scaled(by_name(pair_name("J", nu, mu)).apply(psi), -1.0);
}

GeneratorSet build_class1(const MomentumGrid& grid, double mass, SpinChoice spin_choice,
                          const Class1Options& options) {
    require_mass_parameter(mass);
    if (options.spin_coupling_sign != 1 && options.spin_coupling_sign != -1) {
        throw contract_error("spin coupling sign must be +1 or -1");
    }
    const std::size_t n = grid.n;
    if (spin_choice == SpinChoice::spinor && n == 1) {
        throw contract_error("no spinor content on a one-dimensional grid");
    }

    GeneratorSet set;
    set.orbit_class = OrbitClass::timelike;
    set.grid = grid;
    set.n = n;
    set.mass = mass;
    set.x0 = options.x0;
    set.spin = spin_choice == SpinChoice::scalar ? LittleSpin(1) : rotation_spin_lowest(n);
    set.spin_dim = set.spin.dim();
    {
        std::vector<int> indices;
        for (int k = 1; k <= int(n); ++k) {
            indices.push_back(k);
        }
        verify_spin_brackets(set.spin, indices);
    }

    const double m = mass;
    const double x0 = options.x0;
    const double sign = double(options.spin_coupling_sign);
    const auto energy_mul = [m](const GridWavefunction& psi) {
        return apply_multiplier(
            psi, [m](const std::array<double, 4>& p) { return cdouble(energy_timelike(p, m)); });
    };

    Generator p0;
    p0.name = "P0";
    p0.pointwise_multiplier = true;
    p0.apply = energy_mul;
    set.generators.push_back(p0);
    for (int k = 1; k <= int(n); ++k) {
        Generator pk;
        pk.name = "P" + std::to_string(k);
        pk.pointwise_multiplier = true;
        pk.apply = momentum_multiplier(k - 1);
        set.generators.push_back(pk);
    }
    for (int k = 1; k <= int(n); ++k) {
        for (int l = k + 1; l <= int(n); ++l) {
            Generator j;
            j.name = pair_name("J", k, l);
            const NumericMatrix skl = set.spin.component(k, l);
            const bool has_spin = set.spin.has(k, l);
            j.apply = [k, l, skl, has_spin](const GridWavefunction& psi) {
                GridWavefunction out = position_apply(apply_momentum(psi, l - 1), k - 1) -
                                       position_apply(apply_momentum(psi, k - 1), l - 1);
                if (has_spin) {
                    out = out + apply_spin_matrix(psi, skl);
                }
                return out;
            };
            set.generators.push_back(j);
        }
    }
    for (int k = 1; k <= int(n); ++k) {
        Generator j;
        j.name = pair_name("J", 0, k);
        LittleSpin spin = set.spin;
        const std::size_t nn = n;
        j.apply = [k, m, x0, sign, spin, nn, energy_mul](const GridWavefunction& psi) {
            // -(x_k P0 + P0 x_k)/2, composed exactly as written.
            GridWavefunction out =
                scaled(position_apply(energy_mul(psi), k - 1) + energy_mul(position_apply(psi, k - 1)),
                       -0.5);
            if (x0 != 0.0) {
                out = out + scaled(apply_momentum(psi, k - 1), x0);
            }
            bool any_spin = false;
            GridWavefunction coupled = make_wavefunction(psi.grid, psi.spin_dim);
            for (int l = 1; l <= int(nn); ++l) {
                if (l == k || !spin.has(k, l)) {
                    continue;
                }
                coupled = coupled + apply_spin_matrix(apply_momentum(psi, l - 1), spin.component(k, l));
                any_spin = true;
            }
            if (any_spin) {
                coupled = apply_multiplier(coupled, [m](const std::array<double, 4>& p) {
                    return cdouble(1.0 / (energy_timelike(p, m) + m));
                });
                out = out - scaled(coupled, sign);
            }
            return out;
        };
        j.x0_derivative = momentum_multiplier(k - 1);
        set.generators.push_back(j);
    }
    return set;
}

GeneratorSet build_class3(const MomentumGrid& grid, double mass, SpinChoice spin_choice,
                          const Class3Options& options) {
    require_mass_parameter(mass);
    const std::size_t n = grid.n;
    if (spin_choice == SpinChoice::spinor && n == 1) {
        throw contract_error("no spinor content on a one-dimensional grid");
    }
    if (grid.extent <= mass) {
        throw contract_error("grid extent must exceed the orbit mass parameter");
    }

    GeneratorSet set;
    set.orbit_class = OrbitClass::spacelike;
    set.grid = grid;
    set.n = n;
    set.mass = mass;
    set.x0 = options.x0;
    set.spin = spin_choice == SpinChoice::scalar ? LittleSpin(1) : boost_spin_lowest(n);
    set.spin_dim = set.spin.dim();
    {
        std::vector<int> indices;
        for (int mu = 0; mu < int(n); ++mu) {
            indices.push_back(mu);
        }
        verify_spin_brackets(set.spin, indices);
    }

    const double m = mass;
    const double x0 = options.x0;
    const double guard = grid.spacing() * 1e-12;
    const auto energy_mul = [m](const GridWavefunction& psi) {
        return apply_multiplier(
            psi, [m](const std::array<double, 4>& p) { return cdouble(energy_spacelike(p, m)); });
    };
    // 1/(p_n + mass), zeroed within rounding distance of the excluded plane.
    const auto inv_plane = [m, n, guard](const GridWavefunction& psi) {
        return apply_multiplier(psi, [m, n, guard](const std::array<double, 4>& p) {
            const double d = p[n - 1] + m;
            return std::abs(d) < guard ? cdouble(0.0) : cdouble(1.0 / d);
        });
    };

    Generator p0;
    p0.name = "P0";
    p0.pointwise_multiplier = true;
    p0.apply = energy_mul;
    set.generators.push_back(p0);
    for (int k = 1; k <= int(n); ++k) {
        Generator pk;
        pk.name = "P" + std::to_string(k);
        pk.pointwise_multiplier = true;
        pk.apply = momentum_multiplier(k - 1);
        set.generators.push_back(pk);
    }
    for (int a = 1; a <= int(n); ++a) {
        for (int b = a + 1; b <= int(n); ++b) {
            Generator j;
            j.name = pair_name("J", a, b);
            if (b < int(n)) {
                // Rotation inside the stabilized hyperplane.
                const NumericMatrix sab = set.spin.component(a, b);
                const bool has_spin = set.spin.has(a, b);
                j.apply = [a, b, sab, has_spin](const GridWavefunction& psi) {
                    GridWavefunction out = position_apply(apply_momentum(psi, b - 1), a - 1) -
                                           position_apply(apply_momentum(psi, a - 1), b - 1);
                    if (has_spin) {
                        out = out + apply_spin_matrix(psi, sab);
                    }
                    return out;
                };
            } else {
                // Rotation into the distinguished axis: spin enters through
                // the pole-regularized combination (S_ab p_b - S_a0 P0).
                LittleSpin spin = set.spin;
                const std::size_t nn = n;
                j.apply = [a, spin, nn, energy_mul, inv_plane](const GridWavefunction& psi) {
                    GridWavefunction out =
                        position_apply(apply_momentum(psi, int(nn) - 1), a - 1) -
                        position_apply(apply_momentum(psi, a - 1), int(nn) - 1);
                    GridWavefunction coupled = make_wavefunction(psi.grid, psi.spin_dim);
                    bool any_spin = false;
                    for (int b = 1; b < int(nn); ++b) {
                        if (b == a || !spin.has(a, b)) {
                            continue;
                        }
                        coupled =
                            coupled + apply_spin_matrix(apply_momentum(psi, b - 1), spin.component(a, b));
                        any_spin = true;
                    }
                    if (spin.has(0, a)) {
                        // -S_a0 P0 = +S_0a P0
                        coupled = coupled + apply_spin_matrix(energy_mul(psi), spin.component(0, a));
                        any_spin = true;
                    }
                    if (any_spin) {
                        out = out - inv_plane(coupled);
                    }
                    return out;
                };
            }
            set.generators.push_back(j);
        }
    }
    for (int k = 1; k <= int(n); ++k) {
        Generator j;
        j.name = pair_name("J", 0, k);
        LittleSpin spin = set.spin;
        const std::size_t nn = n;
        j.apply = [k, x0, spin, nn, energy_mul, inv_plane](const GridWavefunction& psi) {
            GridWavefunction out =
                scaled(position_apply(energy_mul(psi), k - 1) + energy_mul(position_apply(psi, k - 1)),
                       -0.5);
            if (x0 != 0.0) {
                out = out + scaled(apply_momentum(psi, k - 1), x0);
            }
            if (k < int(nn)) {
                if (spin.has(0, k)) {
                    out = out + apply_spin_matrix(psi, spin.component(0, k));
                }
            } else {
                GridWavefunction coupled = make_wavefunction(psi.grid, psi.spin_dim);
                bool any_spin = false;
                for (int a = 1; a < int(nn); ++a) {
                    if (!spin.has(0, a)) {
                        continue;
                    }
                    coupled =
                        coupled + apply_spin_matrix(apply_momentum(psi, a - 1), spin.component(0, a));
                    any_spin = true;
                }
                if (any_spin) {
                    out = out - inv_plane(coupled);
                }
            }
            return out;
        };
        j.x0_derivative = momentum_multiplier(k - 1);
        set.generators.push_back(j);
    }
    return set;
}

void check_spacelike_support(const GridWavefunction& psi, double mass) {
    require_mass_parameter(mass);
    const double margin = 4.0 * psi.grid.spacing();
    const std::size_t n = psi.grid.n;
    double peak = 0.0;
    double forbidden = 0.0;
    const std::size_t sites = psi.grid.total_sites();
    for (std::size_t site = 0; site < sites; ++site) {
        const std::array<double, 4> p = psi.momentum(site);
        double sq = 0.0;
        for (double c : p) {
            sq += c * c;
        }
        const bool bad = std::sqrt(sq) < mass + margin || std::abs(p[n - 1] + mass) < margin;
        for (std::size_t s = 0; s < psi.spin_dim; ++s) {
            const double a = std::abs(psi.at(site, s));
            peak = std::max(peak, a);
            if (bad) {
                forbidden = std::max(forbidden, a);
            }
        }
    }
    if (forbidden > kSupportLevel * peak) {
        throw std::domain_error(
            "state has support within four grid spacings of the excluded sphere or plane "
            "(forbidden amplitude " +
            std::to_string(forbidden) + " vs peak " + std::to_string(peak) + ")");
    }
}

RelationReport commutator_residuals(const GeneratorSet& set, const GridWavefunction& psi,
                                    double tolerance) {
    if (!(psi.grid == set.grid) || psi.spin_dim != set.spin_dim) {
        throw shape_error("state does not match the generator set's grid or spin dimension");
    }
    if (set.orbit_class == OrbitClass::spacelike) {
        check_spacelike_support(psi, set.mass);
    }
    const double norm = psi.norm();
    if (norm == 0.0) {
        throw contract_error("test state must be nonzero");
    }

    const int n = int(set.n);
    std::vector<int> plabels;
    for (int mu = 0; mu <= n; ++mu) {
        plabels.push_back(mu);
    }
    std::vector<std::pair<int, int>> jpairs;
    for (int k = 1; k <= n; ++k) {
        for (int l = k + 1; l <= n; ++l) {
            jpairs.emplace_back(k, l);
        }
    }
    for (int k = 1; k <= n; ++k) {
        jpairs.emplace_back(0, k);
    }

    // First level: every generator applied to the state once.
    std::map<int, GridWavefunction> p_first;
    for (int mu : plabels) {
        p_first.emplace(mu, set.apply_p(mu, psi));
    }
    std::map<std::pair<int, int>, GridWavefunction> j_first;
    for (const auto& pr : jpairs) {
        j_first.emplace(pr, set.by_name(pair_name("J", pr.first, pr.second)).apply(psi));
    }
    const auto j_cached = [&](int mu, int nu) {
        GridWavefunction zero = make_wavefunction(psi.grid, psi.spin_dim);
        if (mu == nu) {
            return zero;
        }
        const auto it = j_first.find({std::min(mu, nu), std::max(mu, nu)});
        return mu < nu ? it->second : scaled(it->second, -1.0);
    };

    RelationReport report;
    const cdouble mi(0.0, -1.0);

    for (std::size_t i = 0; i < plabels.size(); ++i) {
        for (std::size_t j = i + 1; j < plabels.size(); ++j) {
            const int mu = plabels[i];
            const int nu = plabels[j];
            const GridWavefunction lhs =
                set.apply_p(mu, p_first.at(nu)) - set.apply_p(nu, p_first.at(mu));
            report.add_numeric("[P" + std::to_string(mu) + ",P" + std::to_string(nu) + "]",
                               lhs.norm() / norm, tolerance);
        }
    }
    for (int mu : plabels) {
        for (const auto& [r, s] : jpairs) {
            const Generator& jg = set.by_name(pair_name("J", r, s));
            GridWavefunction lhs =
                scaled(set.apply_p(mu, j_first.at({r, s})) - jg.apply(p_first.at(mu)), mi);
            GridWavefunction rhs = make_wavefunction(psi.grid, psi.spin_dim);
            if (metric_g(mu, r) != 0.0) {
                rhs = rhs + scaled(p_first.at(s), metric_g(mu, r));
            }
            if (metric_g(mu, s) != 0.0) {
                rhs = rhs - scaled(p_first.at(r), metric_g(mu, s));
            }
            report.add_numeric(
                "[P" + std::to_string(mu) + ",J" + std::to_string(r) + std::to_string(s) + "]",
                (lhs - rhs).norm() / norm, tolerance);
        }
    }
    for (std::size_t i = 0; i < jpairs.size(); ++i) {
        for (std::size_t j = i + 1; j < jpairs.size(); ++j) {
            const auto [mu, nu] = jpairs[i];
            const auto [r, s] = jpairs[j];
            const Generator& ja = set.by_name(pair_name("J", mu, nu));
            const Generator& jb = set.by_name(pair_name("J", r, s));
            GridWavefunction lhs =
                scaled(ja.apply(j_first.at({r, s})) - jb.apply(j_first.at({mu, nu})), mi);
            GridWavefunction rhs = make_wavefunction(psi.grid, psi.spin_dim);
            if (metric_g(mu, s) != 0.0 && nu != r) {
                rhs = rhs + scaled(j_cached(nu, r), metric_g(mu, s));
            }
            if (metric_g(nu, r) != 0.0 && mu != s) {
                rhs = rhs + scaled(j_cached(mu, s), metric_g(nu, r));
            }
            if (metric_g(mu, r) != 0.0 && nu != s) {
                rhs = rhs - scaled(j_cached(nu, s), metric_g(mu, r));
            }
            if (metric_g(nu, s) != 0.0 && mu != r) {
                rhs = rhs - scaled(j_cached(mu, r), metric_g(nu, s));
            }
            report.add_numeric("[J" + std::to_string(mu) + std::to_string(nu) + ",J" +
                                   std::to_string(r) + std::to_string(s) + "]",
                               (lhs - rhs).norm() / norm, tolerance);
        }
    }
    return report;
}

RelationReport invariance_residuals(const GeneratorSet& set, const GridWavefunction& psi,
                                    double tolerance) {
    if (!(psi.grid == set.grid) || psi.spin_dim != set.spin_dim) {
        throw shape_error("state does not match the generator set's grid or spin dimension");
    }
    if (set.orbit_class == OrbitClass::spacelike) {
        check_spacelike_support(psi, set.mass);
    }
    const double norm = psi.norm();
    if (norm == 0.0) {
        throw contract_error("test state must be nonzero");
    }
    const GridWavefunction p0_psi = set.apply_p(0, psi);

    RelationReport report;
    for (const Generator& g : set.generators) {
        // i dQ/dx0 + [Q, P0] applied to the state.
        GridWavefunction r = g.apply(p0_psi) - set.apply_p(0, g.apply(psi));
        if (g.x0_derivative) {
            r = r + scaled(g.x0_derivative(psi), cdouble(0.0, 1.0));
        }
        report.add_numeric("conserved(" + g.name + ")", r.norm() / norm, tolerance);
    }
    return report;
}

namespace {

double canonical_uniform(std::mt19937& rng) {
    // 53-bit mantissa draw; identical across standard libraries.
    const std::uint64_t hi = rng();
    const std::uint64_t lo = rng();
    return double(((hi << 32) | lo) >> 11) * 0x1.0p-53;
}

const std::vector<double>& spacelike_direction(std::size_t n) {
    static const std::vector<double> d1{1.0};
    static const std::vector<double> d2{0.554, 0.832};
    static const std::vector<double> d3{0.552, 0.092, 0.829};
    static const std::vector<double> d4{0.510, 0.085, 0.767, 0.381};
    switch (n) {
        case 1:
            return d1;
        case 2:
            return d2;
        case 3:
            return d3;
        case 4:
            return d4;
        default:
            throw contract_error("grid dimension must be 1..4");
    }
}

}  // namespace

GridWavefunction standard_test_state(const GeneratorSet& set, unsigned seed) {
    std::mt19937 rng(seed);
    const std::size_t n = set.n;
    const double L = set.grid.extent;
    const double d = set.grid.spacing();

    std::vector<double> sigma(n);
    std::vector<double> center(n);
    if (set.orbit_class == OrbitClass::timelike) {
        const double lo = std::max(L / 16.0, 2.3 * d);
        const double hi = std::max(lo, std::min(L / 6.0, 0.96 * L / 6.3));
        for (std::size_t j = 0; j < n; ++j) {
            sigma[j] = lo + (hi - lo) * canonical_uniform(rng);
        }
        for (std::size_t j = 0; j < n; ++j) {
            center[j] = -0.04 * L + 0.08 * L * canonical_uniform(rng);
        }
    } else {
        double sig_max = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            sigma[j] = (3.5 + 0.7 * canonical_uniform(rng)) * d;
            sig_max = std::max(sig_max, sigma[j]);
        }
        const std::vector<double>& dir = spacelike_direction(n);
        double dn = 0.0;
        for (double c : dir) {
            dn += c * c;
        }
        dn = std::sqrt(dn);
        const double radius = std::max(set.mass + 4.0 * d + 7.0 * sig_max, 0.54 * L);
        for (std::size_t j = 0; j < n; ++j) {
            center[j] = radius * dir[j] / dn + (-0.1 + 0.2 * canonical_uniform(rng));
        }
    }

    std::vector<cdouble> weight(set.spin_dim);
    if (set.spin_dim == 1) {
        weight[0] = 1.0;
    } else {
        double wn = 0.0;
        for (std::size_t s = 0; s < set.spin_dim; ++s) {
            const double re = -1.0 + 2.0 * canonical_uniform(rng);
            const double im = -1.0 + 2.0 * canonical_uniform(rng);
            weight[s] = cdouble(re, im);
            wn += std::norm(weight[s]);
        }
        wn = std::sqrt(wn);
        for (auto& w : weight) {
            w /= wn;
        }
    }

    GridWavefunction psi = make_wavefunction(set.grid, set.spin_dim);
    const std::size_t sites = set.grid.total_sites();
    for (std::size_t site = 0; site < sites; ++site) {
        const std::array<double, 4> p = psi.momentum(site);
        double expo = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double dpj = p[j] - center[j];
            expo += dpj * dpj / (2.0 * sigma[j] * sigma[j]);
        }
        const double g = std::exp(-expo);
        for (std::size_t s = 0; s < set.spin_dim; ++s) {
            psi.at(site, s) = weight[s] * g;
        }
    }
    if (set.orbit_class == OrbitClass::spacelike) {
        check_spacelike_support(psi, set.mass);
    }
    return psi;
}

EvolutionKind parse_evolution_kind(const std::string& name) {
    if (name == "irreducible_p0") {
        return EvolutionKind::irreducible_p0;
    }
    if (name == "dirac") {
        return EvolutionKind::dirac;
    }
    if (name == "kdp") {
        return EvolutionKind::kdp;
    }
    throw contract_error("unknown evolution kind: " + name);
}

std::string evolution_kind_name(EvolutionKind kind) {
    switch (kind) {
        case EvolutionKind::irreducible_p0:
            return "irreducible_p0";
        case EvolutionKind::dirac:
            return "dirac";
        case EvolutionKind::kdp:
            return "kdp";
    }
    throw contract_error("unknown evolution kind");
}

GridWavefunction evolve(const StateFile& state, double time, EvolutionKind kind) {
    const OrbitClass oc = orbit_class_from_tag(state.orbit_class);
    const double m = state.mass_parameter;
    require_mass_parameter(m);
    if (!std::isfinite(time)) {
        throw contract_error("evolution time must be finite");
    }
    const GridWavefunction& psi = state.psi;

    if (kind == EvolutionKind::irreducible_p0) {
        if (oc == OrbitClass::spacelike) {
            check_spacelike_support(psi, m);
            return apply_multiplier(psi, [m, time](const std::array<double, 4>& p) {
                return std::exp(cdouble(0.0, -energy_spacelike(p, m) * time));
            });
        }
        return apply_multiplier(psi, [m, time](const std::array<double, 4>& p) {
            return std::exp(cdouble(0.0, -energy_timelike(p, m) * time));
        });
    }

    if (oc != OrbitClass::timelike) {
        throw contract_error("matrix evolution kinds require the timelike orbit");
    }

    std::vector<NumericMatrix> comps;  // H(p) = sum_k p_k comps[k-1] + m comps[4]
    if (kind == EvolutionKind::dirac) {
        if (psi.grid.n != 4 || psi.spin_dim != 4) {
            throw contract_error("four-component evolution needs a four-axis grid and spin dimension 4");
        }
        const GammaSet gamma = build_gamma_5d();
        const ExactMatrix beta = gamma.by_label(0);
        for (int k = 1; k <= 4; ++k) {
            comps.push_back(to_numeric(beta * gamma.by_label(k)));
        }
        comps.push_back(to_numeric(beta));
    } else {
        if (psi.spin_dim != 6 && psi.spin_dim != 15) {
            throw contract_error("trilinear evolution needs spin dimension 6 or 15");
        }
        const BetaSet set = psi.spin_dim == 6 ? build_beta6() : build_beta15();
        const ExactMatrix& b5 = set.by_label(5);
        for (int k = 1; k <= 4; ++k) {
            const ExactMatrix s5k =
                (b5 * set.by_label(k) - set.by_label(k) * b5).scaled(ExactScalar::i());
            comps.push_back(to_numeric(s5k));
        }
        comps.push_back(to_numeric(b5));
    }

    const std::size_t S = psi.spin_dim;
    GridWavefunction out = make_wavefunction(psi.grid, S);
    const std::size_t sites = psi.grid.total_sites();
    std::vector<cdouble> h(S * S);
    std::vector<cdouble> v(S), hv(S), hhv(S);
    for (std::size_t site = 0; site < sites; ++site) {
        const std::array<double, 4> p = psi.momentum(site);
        const double omega = energy_timelike(p, m);
        for (std::size_t r = 0; r < S; ++r) {
            for (std::size_t c = 0; c < S; ++c) {
                cdouble acc = comps[4].at(r, c) * m;
                for (std::size_t k = 0; k < 4; ++k) {
                    acc += comps[k].at(r, c) * p[k];
                }
                h[r * S + c] = acc;
            }
        }
        for (std::size_t s = 0; s < S; ++s) {
            v[s] = psi.at(site, s);
        }
        const auto matvec = [&](const std::vector<cdouble>& x, std::vector<cdouble>& y) {
            for (std::size_t r = 0; r < S; ++r) {
                cdouble acc = 0.0;
                for (std::size_t c = 0; c < S; ++c) {
                    acc += h[r * S + c] * x[c];
                }
                y[r] = acc;
            }
        };
        matvec(v, hv);
        const double co = std::cos(omega * time);
        const double si = std::sin(omega * time);
        if (kind == EvolutionKind::dirac) {
            // exp(-iHt) = cos(wt) - i sin(wt) H/w   (H^2 = w^2)
            for (std::size_t s = 0; s < S; ++s) {
                out.at(site, s) = co * v[s] + cdouble(0.0, -si / omega) * hv[s];
            }
        } else {
            // exp(-iHt) = 1 + (cos(wt)-1) H^2/w^2 - i sin(wt) H/w  (H^3 = w^2 H)
            matvec(hv, hhv);
            for (std::size_t s = 0; s < S; ++s) {
                out.at(site, s) = v[s] + (co - 1.0) / (omega * omega) * hhv[s] +
                                  cdouble(0.0, -si / omega) * hv[s];
            }
        }
    }
    return out;
}

}  // namespace p1n
