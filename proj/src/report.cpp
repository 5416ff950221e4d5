#include "discotop/report.hpp"

#include <sstream>

#include "discotop/rng.hpp"

namespace disco {

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = "discotop-report-v1";
    j["experiment"] = experiment;
    j["config"] = config;
    j["seed"] = seed;
    j["prng"] = prng.empty() ? std::string(kRngName) : prng;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["value"] = c.value;
        cj["bound"] = c.bound;
        cj["citation"] = c.citation;
        cj["pass"] = c.pass;
        cj["tolerance"] = c.tolerance;
        cj["exact"] = c.exact;
        if (!c.ladder.empty()) {
            cj["ladder"] = nlohmann::ordered_json::array();
            for (const auto& [rho, v] : c.ladder) cj["ladder"].push_back({rho, v});
        }
        if (!c.extra.is_null()) cj["extra"] = c.extra;
        j["checks"].push_back(std::move(cj));
    }
    j["provenance"] = {{"version", version}, {"wall_time_ms", wall_time_ms}};
    return j;
}

Report Report::from_json(const nlohmann::ordered_json& j) {
    Report rep;
    rep.experiment = j.at("experiment").get<std::string>();
    rep.config = j.at("config");
    rep.seed = j.at("seed").get<std::uint64_t>();
    rep.prng = j.at("prng").get<std::string>();
    for (const auto& cj : j.at("checks")) {
        CheckResult c;
        c.name = cj.at("name").get<std::string>();
        c.value = cj.at("value").get<double>();
        c.bound = cj.at("bound").get<double>();
        c.citation = cj.at("citation").get<std::string>();
        c.pass = cj.at("pass").get<bool>();
        c.tolerance = cj.at("tolerance").get<double>();
        c.exact = cj.at("exact").get<bool>();
        if (cj.contains("ladder"))
            for (const auto& e : cj.at("ladder"))
                c.ladder.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
        if (cj.contains("extra")) c.extra = cj.at("extra");
        rep.checks.push_back(std::move(c));
    }
    rep.version = j.at("provenance").at("version").get<std::string>();
    rep.wall_time_ms = j.at("provenance").at("wall_time_ms").get<double>();
    return rep;
}

std::string Report::to_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "name,value,bound,citation,pass,tolerance,exact\n";
    for (const auto& c : checks)
        os << c.name << "," << c.value << "," << c.bound << "," << c.citation << ","
           << (c.pass ? "true" : "false") << "," << c.tolerance << ","
           << (c.exact ? "true" : "false") << "\n";
    return os.str();
}

std::string emit_report(const Report& rep, ReportFormat format) {
    if (format == ReportFormat::csv) return rep.to_csv();
    return rep.to_json().dump(2) + "\n";
}

} // namespace disco
