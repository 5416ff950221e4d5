#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace disco {

// One pass/fail line: a measured value against a theorem-backed bound, with
// exactly one citation, the tolerance used (0 = exact), and the rho-ladder
// when the value came from an estimator.
struct CheckResult {
    std::string name;
    double value = 0.0;
    double bound = 0.0;
    std::string citation;
    bool pass = false;
    double tolerance = 0.0;
    bool exact = true; // no tolerance was needed
    std::vector<std::pair<double, double>> ladder;
    nlohmann::ordered_json extra; // check-specific payload (Betti vectors, counts, ...)
};

struct Report {
    std::string experiment;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    std::vector<CheckResult> checks;
    std::uint64_t seed = 0;
    std::string prng; // generator name, recorded for reproducibility
    std::string version = "0.1.0";
    double wall_time_ms = 0.0;

    bool all_pass() const;
    nlohmann::ordered_json to_json() const;
    static Report from_json(const nlohmann::ordered_json& j);
    std::string to_csv() const;
};

enum class ReportFormat { json, csv };

std::string emit_report(const Report& rep, ReportFormat format);

} // namespace disco
