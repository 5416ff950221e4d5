#include "doctest.h"

#include <sstream>

#include "discotop/experiments.hpp"
#include "discotop/report.hpp"

using namespace disco;

TEST_CASE("empty report serializes to valid json") {
    Report rep;
    rep.experiment = "noop";
    const std::string body = emit_report(rep, ReportFormat::json);
    const auto parsed = nlohmann::ordered_json::parse(body);
    CHECK(parsed["schema"] == "discotop-report-v1");
    CHECK(parsed["checks"].empty());
}

TEST_CASE("csv row count is checks plus header") {
    Report rep;
    rep.experiment = "x";
    for (int i = 0; i < 3; ++i) {
        CheckResult c;
        c.name = "chk" + std::to_string(i);
        c.citation = "none";
        c.pass = true;
        rep.checks.push_back(c);
    }
    const std::string csv = emit_report(rep, ReportFormat::csv);
    std::size_t lines = 0;
    std::stringstream ss(csv);
    for (std::string line; std::getline(ss, line);) ++lines;
    CHECK(lines == 4);
}

TEST_CASE("json reports round-trip") {
    const Report rep = lemma_suite_experiment(5, 3, 5, 500);
    const auto j = rep.to_json();
    const auto reparsed = nlohmann::ordered_json::parse(j.dump(2));
    CHECK(reparsed == j);

    const Report back = Report::from_json(reparsed);
    CHECK(back.to_json() == j);
}

TEST_CASE("same config and seed produce identical reports modulo wall time") {
    Report a = lemma_suite_experiment(7, 5, 5, 1000);
    Report b = lemma_suite_experiment(7, 5, 5, 1000);
    a.wall_time_ms = 1.0;
    b.wall_time_ms = 2.0;
    auto ja = a.to_json();
    auto jb = b.to_json();
    ja["provenance"].erase("wall_time_ms");
    jb["provenance"].erase("wall_time_ms");
    CHECK(ja == jb);

    Report c = lemma_suite_experiment(8, 5, 5, 1000);
    auto jc = c.to_json();
    jc["provenance"].erase("wall_time_ms");
    CHECK(jc != ja);
}

TEST_CASE("every check line carries exactly one citation") {
    for (const Report& rep :
         {vkf_experiment(1, 100), tverberg_experiment(2, 1, 20), sphere_homology_experiment(1),
          constants_table_report(1, 5)}) {
        for (const auto& c : rep.checks) CHECK_FALSE(c.citation.empty());
    }
}
