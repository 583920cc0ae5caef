#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"

#include "p1n/classify.hpp"
#include "p1n/clifford.hpp"
#include "p1n/errors.hpp"
#include "p1n/fw.hpp"
#include "p1n/kdp.hpp"
#include "p1n/numeric.hpp"
#include "p1n/report.hpp"

namespace py = pybind11;

namespace {

p1n::GammaSet gamma_set_for(const std::string& selector) {
    if (selector == "5d") {
        return p1n::build_gamma_5d();
    }
    if (selector == "8d") {
        return p1n::build_gamma_8d();
    }
    const std::string prefix = "generic:";
    if (selector.rfind(prefix, 0) == 0) {
        return p1n::build_gamma_generic(std::stoi(selector.substr(prefix.size())));
    }
    throw p1n::contract_error("unknown set selector: " + selector);
}

p1n::BetaSet beta_set_for(int rep) {
    if (rep == 6) {
        return p1n::build_beta6();
    }
    if (rep == 15) {
        return p1n::build_beta15();
    }
    throw p1n::contract_error("rep must be 6 or 15");
}

p1n::Equation equation_for(const std::string& name) {
    const std::optional<p1n::Equation> eq = p1n::parse_equation(name);
    if (!eq) {
        throw p1n::contract_error("unknown equation: " + name);
    }
    return *eq;
}

std::vector<std::vector<std::complex<double>>> matrix_rows(const p1n::NumericMatrix& m) {
    std::vector<std::vector<std::complex<double>>> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rows[r].resize(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            rows[r][c] = m.at(r, c);
        }
    }
    return rows;
}

py::dict report_dict(const p1n::RelationReport& report) {
    py::list items;
    for (const auto& item : report.items) {
        py::dict d;
        d["name"] = item.name;
        d["pass"] = item.pass;
        d["residual"] = item.residual ? py::object(py::float_(*item.residual))
                                      : py::object(py::none());
        items.append(d);
    }
    py::dict out;
    out["items"] = items;
    out["pass"] = report.pass();
    return out;
}

py::object json_to_py(const nlohmann::ordered_json& j) {
    using value_t = nlohmann::ordered_json::value_t;
    switch (j.type()) {
        case value_t::object: {
            py::dict d;
            for (const auto& [key, value] : j.items()) {
                d[py::str(key)] = json_to_py(value);
            }
            return d;
        }
        case value_t::array: {
            py::list l;
            for (const auto& value : j) {
                l.append(json_to_py(value));
            }
            return l;
        }
        case value_t::string:
            return py::str(j.get<std::string>());
        case value_t::boolean:
            return py::bool_(j.get<bool>());
        case value_t::number_integer:
            return py::int_(j.get<long long>());
        case value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case value_t::number_float:
            return py::float_(j.get<double>());
        default:
            return py::none();
    }
}

}  // namespace

PYBIND11_MODULE(p1n, m) {
    m.doc() = "matrix and momentum-space realizations of an inhomogeneous rotation algebra";

    m.def("version", [] { return std::string("1.0.0"); });

    m.def(
        "gamma_matrices",
        [](const std::string& selector) {
            const p1n::GammaSet set = gamma_set_for(selector);
            std::vector<std::vector<std::vector<std::complex<double>>>> out;
            out.reserve(set.matrices.size());
            for (const auto& matrix : set.matrices) {
                out.push_back(matrix_rows(p1n::to_numeric(matrix)));
            }
            return out;
        },
        py::arg("set"),
        "Anticommuting matrix set as nested lists; set is 5d, 8d, or generic:<n>.");

    m.def(
        "beta_matrices",
        [](int rep) {
            const p1n::BetaSet set = beta_set_for(rep);
            std::vector<std::vector<std::vector<std::complex<double>>>> out;
            out.reserve(set.matrices.size());
            for (const auto& matrix : set.matrices) {
                out.push_back(matrix_rows(p1n::to_numeric(matrix)));
            }
            return out;
        },
        py::arg("rep"), "Trilinear matrix set (rep 6 or 15) as nested lists.");

    m.def(
        "verify_clifford",
        [](const std::string& selector) {
            const p1n::GammaSet set = gamma_set_for(selector);
            p1n::RelationReport report = p1n::verify_clifford(set);
            if (selector == "5d") {
                report.add_exact("product_identity",
                                 p1n::check_product_constraint(set).holds_product_rule);
            } else if (selector == "8d") {
                const auto product = p1n::check_product_constraint(set);
                report.add_exact("designated_product_identity",
                                 product.holds_designated_product);
                report.add_exact("product_identity_excluded", !product.holds_product_rule);
            }
            return report_dict(report);
        },
        py::arg("set"), "Exact pairwise anticommutator check plus product constraints.");

    m.def(
        "verify_kdp",
        [](int rep) {
            const p1n::BetaSet set = beta_set_for(rep);
            p1n::RelationReport report = p1n::verify_kdp(set);
            for (const auto& item : p1n::covariance_check(set).items) {
                report.items.push_back(item);
            }
            for (const auto& item : p1n::psquared_check(set, 6).items) {
                report.items.push_back(item);
            }
            return report_dict(report);
        },
        py::arg("rep"), "Exact trilinear, covariance, and squared-momentum checks.");

    m.def(
        "classify",
        [](const std::string& equation) {
            const p1n::RepContent content =
                p1n::classify(p1n::build_equation_spec(equation_for(equation), 1.0));
            py::dict out;
            out["content"] = json_to_py(p1n::rep_content_json(content));
            out["ptc_pattern"] = p1n::is_ptc_pattern(content);
            return out;
        },
        py::arg("equation"),
        "Block decomposition of a wave equation's matrix content by energy sign and "
        "invariant labels.");

    m.def(
        "ptc",
        [](const std::string& equation) {
            return p1n::is_ptc_pattern(
                p1n::classify(p1n::build_equation_spec(equation_for(equation), 1.0)));
        },
        py::arg("equation"),
        "Whether every block's mirror (energy sign flipped, labels swapped) is present "
        "with equal multiplicity.");

    m.def(
        "fw_report",
        [](const std::string& equation, const std::array<double, 4>& momentum, double kappa) {
            const p1n::FwApplyResult result =
                p1n::fw_for_equation(equation_for(equation), momentum, kappa);
            py::dict out = report_dict(result.report);
            out["angle"] = result.unitary.angle;
            return out;
        },
        py::arg("equation"), py::arg("momentum"), py::arg("kappa"),
        "Diagonalizing-rotation report at the equation's printed angle.");
}
