#pragma once

#include <optional>
#include <string>
#include <vector>

namespace p1n {

/// One named check: exact checks carry no residual, numeric checks carry one.
struct ReportItem {
    std::string name;
    bool pass = false;
    std::optional<double> residual;
};

/// A flat list of checks with an all-of pass flag.
struct RelationReport {
    std::vector<ReportItem> items;

    bool pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    void add_exact(std::string name, bool pass) {
        items.push_back({std::move(name), pass, std::nullopt});
    }
    void add_numeric(std::string name, double residual, double tolerance) {
        items.push_back({std::move(name), residual <= tolerance, residual});
    }
};

}  // namespace p1n
