// Acceptance gate: one criterion per numbered section, each printing a
// single PASS/FAIL line (with measured details indented below it). Run a
// single criterion by number, or "all". Criterion 8 compares byte-level CLI
// output and needs the CLI binary's path as the second argument.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "p1n/classify.hpp"
#include "p1n/clifford.hpp"
#include "p1n/fw.hpp"
#include "p1n/grid.hpp"
#include "p1n/kdp.hpp"
#include "p1n/realization.hpp"
#include "p1n/spectrum.hpp"

namespace {

using p1n::cdouble;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

void note(std::string& detail, const std::string& line) {
    detail += "    " + line + "\n";
}

bool budget(std::string& detail, double elapsed, double limit) {
    char line[128];
    std::snprintf(line, sizeof line, "runtime %.2f s (budget %.0f s)", elapsed, limit);
    note(detail, line);
    return elapsed < limit;
}

double worst_residual(const p1n::RelationReport& report, std::string* name = nullptr) {
    double worst = -1.0;
    for (const auto& item : report.items) {
        if (item.residual && *item.residual > worst) {
            worst = *item.residual;
            if (name) *name = item.name;
        }
    }
    return worst < 0.0 ? 0.0 : worst;
}

// ---------------------------------------------------------------- 1
Outcome criterion_clifford() {
    const auto start = Clock::now();
    Outcome out;
    out.pass = true;

    const p1n::GammaSet five = p1n::build_gamma_5d();
    const p1n::RelationReport five_pairs = p1n::verify_clifford(five);
    const bool five_ok = five_pairs.items.size() == 25 && five_pairs.pass();
    out.pass &= five_ok;
    note(out.detail, std::string("five-matrix set: 25 pair relations exact: ") +
                         (five_ok ? "yes" : "NO"));

    const auto five_product = p1n::check_product_constraint(five);
    out.pass &= five_product.holds_product_rule;
    note(out.detail, std::string("five-matrix product identity: ") +
                         (five_product.holds_product_rule ? "holds" : "VIOLATED"));

    const p1n::GammaSet seven = p1n::build_gamma_8d();
    const p1n::RelationReport seven_pairs = p1n::verify_clifford(seven);
    const bool seven_ok = seven_pairs.items.size() == 49 && seven_pairs.pass();
    out.pass &= seven_ok;
    note(out.detail, std::string("seven-matrix set: 49 pair relations exact: ") +
                         (seven_ok ? "yes" : "NO"));

    const auto seven_product = p1n::check_product_constraint(seven);
    out.pass &= seven_product.holds_designated_product;
    note(out.detail, std::string("designated product identity: ") +
                         (seven_product.holds_designated_product ? "holds" : "VIOLATED"));
    // The naive five-matrix product rule must fail with the two extra
    // matrices present; its absence is the asserted behavior.
    out.pass &= !seven_product.holds_product_rule;
    note(out.detail,
         std::string("naive product identity on the first five matrices: ") +
             (seven_product.holds_product_rule ? "UNEXPECTEDLY HOLDS" : "fails as required"));

    out.pass &= budget(out.detail, seconds_since(start), 1.0);
    return out;
}

// ---------------------------------------------------------------- 2
Outcome criterion_split() {
    const auto start = Clock::now();
    Outcome out;
    out.pass = true;

    const p1n::SpinIsospinPair split =
        p1n::spin_isospin_split(p1n::spin_tensor(p1n::build_gamma_5d()));

    // Expected corner forms: S_a = 1/2 diag(sigma_a, 0), T_a mirrored,
    // squares 3/4 on the respective halves. All comparisons exact.
    const p1n::ExactScalar half = p1n::ExactScalar::frac(1, 2);
    const p1n::ExactScalar i = p1n::ExactScalar::i();
    auto corner = [&](int a, bool upper) {
        p1n::ExactMatrix m(4, 4);
        const std::size_t o = upper ? 0 : 2;
        switch (a) {
            case 1:
                m.at(o, o + 1) = half;
                m.at(o + 1, o) = half;
                break;
            case 2:
                m.at(o, o + 1) = -i * half;
                m.at(o + 1, o) = i * half;
                break;
            default:
                m.at(o, o) = half;
                m.at(o + 1, o + 1) = -half;
                break;
        }
        return m;
    };

    bool forms = true;
    for (int a = 1; a <= 3; ++a) {
        forms &= split.S[a - 1] == corner(a, true);
        forms &= split.T[a - 1] == corner(a, false);
    }
    out.pass &= forms;
    note(out.detail, std::string("spin/isospin corner matrices reproduced exactly: ") +
                         (forms ? "yes" : "NO"));

    const p1n::ExactScalar q = p1n::ExactScalar::frac(3, 4);
    const bool squares =
        split.S_sq == p1n::ExactMatrix::diag({q, q, 0, 0}) &&
        split.T_sq == p1n::ExactMatrix::diag({0, 0, q, q});
    out.pass &= squares;
    note(out.detail, std::string("Casimir squares 3/4 on the halves: ") +
                         (squares ? "yes" : "NO"));

    bool brackets = true;
    for (int a = 0; a < 3; ++a) {
        const int b = (a + 1) % 3;
        const int c = (a + 2) % 3;
        brackets &= p1n::commutator(split.S[a], split.S[b]) == split.S[c].scaled(i);
        brackets &= p1n::commutator(split.T[a], split.T[b]) == split.T[c].scaled(i);
        for (int d = 0; d < 3; ++d) {
            brackets &= p1n::commutator(split.S[a], split.T[d]).is_zero();
        }
    }
    out.pass &= brackets;
    note(out.detail, std::string("angular-momentum brackets exact: ") +
                         (brackets ? "yes" : "NO"));

    out.pass &= budget(out.detail, seconds_since(start), 1.0);
    return out;
}

// ---------------------------------------------------------------- 3
Outcome criterion_kdp() {
    const auto start = Clock::now();
    Outcome out;
    out.pass = true;

    const p1n::BetaSet six = p1n::build_beta6();
    const p1n::BetaSet fifteen = p1n::build_beta15();

    for (const p1n::BetaSet* set : {&six, &fifteen}) {
        const p1n::RelationReport triples = p1n::verify_kdp(*set);
        const bool ok = triples.items.size() == 125 && triples.pass();
        out.pass &= ok;
        note(out.detail, std::to_string(set->dim) + "x" + std::to_string(set->dim) +
                             ": 125 trilinear triples exact: " + (ok ? "yes" : "NO"));
    }

    // Fifth matrix squared: diag(1 x4, 0 x6, 1 x4, 0).
    p1n::ExactMatrix expected(15, 15);
    for (std::size_t d = 0; d < 15; ++d) {
        expected.at(d, d) =
            (d < 4 || (d >= 10 && d < 14)) ? p1n::ExactScalar(1) : p1n::ExactScalar(0);
    }
    const bool fifth = fifteen.by_label(5) * fifteen.by_label(5) == expected;
    out.pass &= fifth;
    note(out.detail, std::string("15x15 fifth matrix squared has the 4+6+4+1 pattern: ") +
                         (fifth ? "yes" : "NO"));

    for (const p1n::BetaSet* set : {&six, &fifteen}) {
        const bool cov = p1n::covariance_check(*set).pass();
        out.pass &= cov;
        note(out.detail, std::to_string(set->dim) + "x" + std::to_string(set->dim) +
                             ": covariance law exact: " + (cov ? "yes" : "NO"));
    }

    out.pass &= budget(out.detail, seconds_since(start), 5.0);
    return out;
}

// ---------------------------------------------------------------- 4
Outcome criterion_classification() {
    const auto start = Clock::now();
    Outcome out;
    out.pass = true;

    using p1n::RepBlock;
    using p1n::RedundantBlock;

    struct Expected {
        p1n::Equation eq;
        std::vector<RepBlock> blocks;
        std::vector<RedundantBlock> redundant;
        bool ptc;
    };
    const std::vector<Expected> table = {
        {p1n::Equation::dirac18a, {{+1, 1, 0, 1}, {-1, 0, 1, 1}}, {}, false},
        {p1n::Equation::dirac18b, {{+1, 0, 1, 1}, {-1, 1, 0, 1}}, {}, false},
        {p1n::Equation::dirac26,
         {{+1, 1, 0, 1}, {+1, 0, 1, 1}, {-1, 1, 0, 1}, {-1, 0, 1, 1}},
         {},
         true},
        {p1n::Equation::kdp6, {{+1, 0, 0, 1}, {-1, 0, 0, 1}}, {{1, 1, 1}}, true},
        {p1n::Equation::kdp15,
         {{+1, 1, 1, 1}, {-1, 1, 1, 1}},
         {{2, 0, 1}, {0, 2, 1}, {0, 0, 1}},
         true},
    };

    for (const Expected& row : table) {
        const p1n::RepContent content =
            p1n::classify(p1n::build_equation_spec(row.eq, 1.0));
        const bool match =
            content.blocks == row.blocks && content.redundant == row.redundant;
        const bool ptc = p1n::is_ptc_pattern(content) == row.ptc;
        out.pass &= match && ptc;
        note(out.detail, p1n::equation_name(row.eq) + " -> " + content.str() +
                             (match ? "" : "  [WRONG CONTENT]") +
                             (ptc ? "" : "  [WRONG MIRROR PATTERN]"));
    }

    // 8 principal + 7 redundant dimensions for the 15x15 set.
    const p1n::RepContent kdp15 =
        p1n::classify(p1n::build_equation_spec(p1n::Equation::kdp15, 1.0));
    std::size_t principal = 0, redundant = 0;
    for (const auto& b : kdp15.blocks) {
        principal += std::size_t(b.mult) * (b.twice_s + 1) * (b.twice_t + 1);
    }
    for (const auto& b : kdp15.redundant) {
        redundant += std::size_t(b.mult) * (b.twice_s + 1) * (b.twice_t + 1);
    }
    const bool dims = principal == 8 && redundant == 7;
    out.pass &= dims;
    note(out.detail, "15x15 principal/redundant dimensions: " + std::to_string(principal) +
                         "/" + std::to_string(redundant) + (dims ? "" : "  [EXPECTED 8/7]"));

    out.pass &= budget(out.detail, seconds_since(start), 5.0);
    return out;
}

// ---------------------------------------------------------------- 5
Outcome criterion_fw() {
    const auto start = Clock::now();
    Outcome out;
    out.pass = true;

    std::mt19937_64 rng(20250816u);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

    for (p1n::FwFamily family : {p1n::FwFamily::dirac4, p1n::FwFamily::dirac8}) {
        double worst_unitarity = 0.0;
        double worst_diag = 0.0;
        bool reports_pass = true;
        for (int trial = 0; trial < 100; ++trial) {
            const double kappa = uniform(0.4, 2.5);
            // Random direction scaled to |p| <= 10 kappa.
            std::array<double, 4> p{};
            double r2 = 0.0;
            for (auto& c : p) {
                c = uniform(-1.0, 1.0);
                r2 += c * c;
            }
            const double scale =
                uniform(0.0, 10.0) * kappa / std::sqrt(std::max(r2, 1e-12));
            for (auto& c : p) {
                c *= scale;
            }
            const p1n::FwApplyResult result = p1n::fw_apply(family, p, kappa);
            worst_unitarity =
                std::max(worst_unitarity, result.unitary.U.unitarity_defect());
            worst_diag = std::max(worst_diag, result.diagonal_residual);
            reports_pass &= result.report.pass();
        }
        const bool ok = worst_unitarity <= 1e-12 && worst_diag <= 1e-10 && reports_pass;
        out.pass &= ok;
        char line[160];
        std::snprintf(line, sizeof line,
                      "%s over 100 seeded momenta: unitarity %.3e (<= 1e-12), diagonal "
                      "residual %.3e (<= 1e-10): %s",
                      p1n::fw_family_name(family).c_str(), worst_unitarity, worst_diag,
                      ok ? "yes" : "NO");
        note(out.detail, line);
    }

    // Trilinear split: the rotation at the printed angle leaves a block
    // coupling equal to the closed-form prediction (the documented measured
    // deviation); the corrected angle removes it.
    for (int rep : {6, 15}) {
        const p1n::BetaSet set = rep == 6 ? p1n::build_beta6() : p1n::build_beta15();
        double worst_match = 0.0;
        double worst_corrected = 0.0;
        for (int trial = 0; trial < 25; ++trial) {
            std::array<double, 4> p{};
            for (auto& c : p) {
                c = uniform(-3.0, 3.0);
            }
            const double kappa = uniform(0.5, 2.0);
            const p1n::KdpSplitResult split = p1n::fw_split_kdp(set, p, kappa);
            worst_match = std::max(
                worst_match,
                std::abs(split.coupling_residual - split.predicted_coupling_residual));
            worst_corrected =
                std::max(worst_corrected, split.corrected_coupling_residual);
        }
        const bool ok = worst_match <= 1e-12 && worst_corrected <= 1e-8;
        out.pass &= ok;
        char line[200];
        std::snprintf(line, sizeof line,
                      "%dx%d split over 25 seeded momenta: measured-vs-predicted coupling "
                      "%.3e (<= 1e-12), corrected-angle coupling %.3e (<= 1e-8): %s",
                      rep, rep, worst_match, worst_corrected, ok ? "yes" : "NO");
        note(out.detail, line);
    }

    out.pass &= budget(out.detail, seconds_since(start), 10.0);
    return out;
}

// ---------------------------------------------------------------- 6
// Residual of one tensor-tensor bracket instance measured through the
// public generator interface; used for the targeted mutation check so the
// sensitivity test does not need a second full relation sweep.
double j_bracket_residual(const p1n::GeneratorSet& gs, const p1n::GridWavefunction& psi,
                          int mu, int nu, int rho, int sig) {
    const p1n::MetricSignature metric = p1n::MetricSignature::lorentz(int(gs.n));
    const p1n::GridWavefunction lhs = gs.apply_j(mu, nu, gs.apply_j(rho, sig, psi)) -
                                      gs.apply_j(rho, sig, gs.apply_j(mu, nu, psi));
    p1n::GridWavefunction rhs = p1n::make_wavefunction(gs.grid, gs.spin_dim);
    auto add = [&](int g, int a, int b) {
        if (g != 0) rhs = rhs + p1n::scaled(gs.apply_j(a, b, psi), double(g));
    };
    add(metric.g(mu, sig), nu, rho);
    add(metric.g(nu, rho), mu, sig);
    add(-metric.g(mu, rho), nu, sig);
    add(-metric.g(nu, sig), mu, rho);
    const p1n::GridWavefunction diff = lhs - p1n::scaled(rhs, cdouble(0.0, 1.0));
    return diff.norm() / psi.norm();
}

Outcome criterion_realization() {
    const auto start = Clock::now();
    Outcome out;
    out.pass = true;
    const double tol = 1e-5;

    {
        const p1n::MomentumGrid grid = p1n::make_grid(4, 32, 10.0);
        const p1n::GeneratorSet set =
            p1n::build_class1(grid, 1.0, p1n::SpinChoice::spinor);
        const p1n::GridWavefunction psi = p1n::standard_test_state(set, 20250816u);

        p1n::RelationReport report = p1n::commutator_residuals(set, psi, tol);
        for (const auto& item : p1n::invariance_residuals(set, psi, tol).items) {
            report.items.push_back(item);
        }
        std::size_t failing = 0;
        for (const auto& item : report.items) {
            if (!item.pass) ++failing;
        }
        std::string worst_name;
        const double worst = worst_residual(report, &worst_name);
        const bool ok = report.pass();
        out.pass &= ok;
        char line[300];
        std::snprintf(line, sizeof line,
                      "timelike n=4 spinor, 32 points/axis, extent 10: %zu/%zu relations "
                      "within 1e-5, worst %.3e on %s: %s",
                      report.items.size() - failing, report.items.size(), worst,
                      worst_name.c_str(), ok ? "yes" : "NO");
        note(out.detail, line);
        if (!ok) {
            const double floor = std::exp(-1.0 * M_PI * 32.0 / (2.0 * 10.0));
            std::snprintf(line, sizeof line,
                          "expected at this resolution: the energy multiplier's position "
                          "kernel decays as exp(-mass |x|) and the periodic position box "
                          "ends at pi N / (2 L), so the wrap-around floor "
                          "exp(-mass pi N / (2 L)) = %.1e exceeds the 1e-5 demand; the "
                          "same relations reach below 1e-6 at 128 points/axis, extent 6",
                          floor);
            note(out.detail, line);
        }

        // Mutation sensitivity at the same configuration, measured on the
        // bracket instances the spin-orbit sign enters.
        p1n::Class1Options flipped;
        flipped.spin_coupling_sign = -1;
        const p1n::GeneratorSet mutated =
            p1n::build_class1(grid, 1.0, p1n::SpinChoice::spinor, flipped);
        double mutated_worst = 0.0;
        const int pairs[2][4] = {{0, 1, 0, 2}, {0, 3, 0, 4}};
        for (const auto& q : pairs) {
            mutated_worst = std::max(
                mutated_worst, j_bracket_residual(mutated, psi, q[0], q[1], q[2], q[3]));
        }
        const bool caught = mutated_worst >= 1e-2;
        out.pass &= caught;
        std::snprintf(line, sizeof line,
                      "sign-flipped spin coupling: worst mixed-bracket residual %.3e "
                      "(>= 1e-2): %s",
                      mutated_worst, caught ? "yes" : "NO");
        note(out.detail, line);
    }

    {
        const p1n::MomentumGrid grid = p1n::make_grid(3, 128, 6.0);
        const p1n::GeneratorSet set =
            p1n::build_class3(grid, 1.0, p1n::SpinChoice::scalar);
        const p1n::GridWavefunction psi = p1n::standard_test_state(set, 20250816u);
        p1n::RelationReport report = p1n::commutator_residuals(set, psi, tol);
        for (const auto& item : p1n::invariance_residuals(set, psi, tol).items) {
            report.items.push_back(item);
        }
        const double worst = worst_residual(report);
        const bool ok = report.pass();
        out.pass &= ok;
        char line[180];
        std::snprintf(line, sizeof line,
                      "spacelike n=3 scalar, 128 points/axis: worst residual %.3e "
                      "(<= 1e-5): %s",
                      worst, ok ? "yes" : "NO");
        note(out.detail, line);
    }

    out.pass &= budget(out.detail, seconds_since(start), 300.0);
    return out;
}

// ---------------------------------------------------------------- 7
Outcome criterion_spectrum() {
    const auto start = Clock::now();
    Outcome out;
    out.pass = true;

    const double kappa = 1.0;
    const p1n::MomentumGrid grid = p1n::make_grid(4, 64, 6.0);
    p1n::StateFile state;
    state.psi = p1n::make_wavefunction(grid, 1);
    state.orbit_class = 1;
    state.mass_parameter = kappa;
    for (std::size_t site = 0; site < grid.total_sites(); ++site) {
        const auto p = state.psi.momentum(site);
        double expo = (p[3] - 2.0) * (p[3] - 2.0) / (2.0 * 0.2 * 0.2);
        for (int a = 0; a < 3; ++a) {
            expo += p[a] * p[a] / 2.0;
        }
        state.psi.at(site, 0) = std::exp(-expo);
    }

    const std::size_t bins = 16;
    const p1n::MassDistribution dist = p1n::mass_distribution(state.psi, kappa, bins);
    const p1n::MassDiagnostics diag = p1n::mass_diagnostics(dist);

    const double width = (dist.m_sq_hi - dist.m_sq_lo) / double(bins);
    const std::size_t expected_bin = std::size_t((5.0 - dist.m_sq_lo) / width);
    const bool peaked = diag.peak_bin == expected_bin;
    out.pass &= peaked;
    char line[200];
    std::snprintf(line, sizeof line,
                  "peak in bin %zu (midpoint m^2 = %.4f); bin containing m^2 = 5 is %zu: %s",
                  diag.peak_bin, diag.peak_m_sq, expected_bin, peaked ? "yes" : "NO");
    note(out.detail, line);

    // Parseval consistency: the binned mass must reproduce the state's full
    // squared norm (cell volume included); the only mass outside the counted
    // positive branch is the gaussian's far tail.
    const double full_mass =
        state.psi.norm() * state.psi.norm() * grid.cell_volume();
    const double parseval = std::abs(dist.binned_mass - full_mass) / full_mass;
    const bool mass_ok = parseval <= 1e-2;
    out.pass &= mass_ok;
    std::snprintf(line, sizeof line,
                  "binned mass vs full squared norm: relative gap %.3e (<= 1e-2): %s",
                  parseval, mass_ok ? "yes" : "NO");
    note(out.detail, line);

    const p1n::GridWavefunction evolved =
        p1n::evolve(state, 1.3, p1n::EvolutionKind::irreducible_p0);
    const p1n::MassDistribution after = p1n::mass_distribution(evolved, kappa, bins);
    double drift = 0.0;
    for (std::size_t b = 0; b < bins; ++b) {
        drift = std::max(drift, std::abs(after.total[b] - dist.total[b]));
    }
    const bool invariant = drift <= 1e-10;
    out.pass &= invariant;
    std::snprintf(line, sizeof line,
                  "density drift under free evolution: %.3e per bin (<= 1e-10): %s", drift,
                  invariant ? "yes" : "NO");
    note(out.detail, line);

    out.pass &= budget(out.detail, seconds_since(start), 120.0);
    return out;
}

// ---------------------------------------------------------------- 8
std::string run_capture(const std::string& command) {
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        return output;
    }
    char buffer[4096];
    std::size_t got = 0;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        output.append(buffer, got);
    }
    pclose(pipe);
    return output;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Outcome criterion_determinism(const std::string& cli) {
    const auto start = Clock::now();
    Outcome out;
    if (cli.empty()) {
        out.pass = false;
        note(out.detail, "no CLI path provided; pass it as the second argument");
        return out;
    }
    out.pass = true;

    const std::vector<std::string> commands = {
        " verify clifford --set 8d",
        " verify kdp --rep 15",
        " classify --equation kdp15",
        " fw --equation dirac26 --momentum 1,2,0,-1 --kappa 2",
        " commutators --class I --n 2 --spin dirac --grid-points 32 --extent 6"
        " --tolerance 1e-2",
    };
    for (const std::string& args : commands) {
        const std::string command = "'" + cli + "'" + args + " 2>/dev/null";
        const std::string first = run_capture(command);
        const std::string second = run_capture(command);
        const bool same = !first.empty() && first == second;
        out.pass &= same;
        note(out.detail, "byte-identical stdout:" + args + (same ? ": yes" : ": NO"));
    }

    // Written state files must also be byte-identical across repeated runs.
    const std::string base =
        " make-state --class I --n 2 --spin scalar --grid-points 16 --extent 6"
        " --output ";
    run_capture("'" + cli + "'" + base + "acc8_state_a.bin 2>/dev/null");
    run_capture("'" + cli + "'" + base + "acc8_state_b.bin 2>/dev/null");
    const std::string bytes_a = slurp("acc8_state_a.bin");
    const std::string bytes_b = slurp("acc8_state_b.bin");
    const bool files_same = !bytes_a.empty() && bytes_a == bytes_b;
    out.pass &= files_same;
    note(out.detail,
         std::string("byte-identical state files from repeated make-state: ") +
             (files_same ? "yes" : "NO"));
    std::remove("acc8_state_a.bin");
    std::remove("acc8_state_b.bin");

    out.pass &= budget(out.detail, seconds_since(start), 60.0);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string selector = argc > 1 ? argv[1] : "all";
    const std::string cli = argc > 2 ? argv[2] : "";

    struct Entry {
        int number;
        const char* label;
        Outcome (*run)();
    };
    const std::vector<Entry> entries = {
        {1, "anticommuting matrix suites", &criterion_clifford},
        {2, "spin/isospin split", &criterion_split},
        {3, "trilinear matrix suites", &criterion_kdp},
        {4, "representation classification", &criterion_classification},
        {5, "diagonalizing rotations", &criterion_fw},
        {6, "grid operator realizations", &criterion_realization},
        {7, "variable-mass spectrum", &criterion_spectrum},
    };

    bool all_pass = true;
    bool ran_any = false;
    for (const Entry& entry : entries) {
        if (selector != "all" && selector != std::to_string(entry.number)) {
            continue;
        }
        ran_any = true;
        const Outcome outcome = entry.run();
        std::printf("criterion %d: %s - %s\n%s", entry.number,
                    outcome.pass ? "PASS" : "FAIL", entry.label, outcome.detail.c_str());
        all_pass &= outcome.pass;
    }
    if (selector == "all" || selector == "8") {
        ran_any = true;
        const Outcome outcome = criterion_determinism(cli);
        std::printf("criterion 8: %s - byte-identical reports\n%s",
                    outcome.pass ? "PASS" : "FAIL", outcome.detail.c_str());
        all_pass &= outcome.pass;
    }
    if (!ran_any) {
        std::fprintf(stderr, "usage: %s [1-8|all] [cli-path]\n", argv[0]);
        return 2;
    }
    return all_pass ? 0 : 1;
}
