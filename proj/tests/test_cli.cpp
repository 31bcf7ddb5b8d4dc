#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "floer/report.hpp"
#include "floer/verify.hpp"

using namespace floer;

namespace {

Engine& engine() {
    static Engine e;
    return e;
}

std::vector<GenusReport> reports_1_to_8() {
    std::vector<GenusReport> reports;
    for (int g = 1; g <= 8; ++g) reports.push_back(build_genus_report(engine(), g, ReportOptions{}));
    return reports;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("format_thousands") {
    CHECK(format_thousands(Int(0)) == "0");
    CHECK(format_thousands(Int(999)) == "999");
    CHECK(format_thousands(Int(1902)) == "1,902");
    CHECK(format_thousands(Int(165868)) == "165,868");
    CHECK(format_thousands(Int(-45275)) == "-45,275");
}

TEST_CASE("json_int switches to decimal strings past 53 bits") {
    CHECK(json_int(Int(42)) == Json(42));
    CHECK(json_int(Int(-17)) == Json(-17));
    Int big = (Int(1) << 60) + 7;
    Json j = json_int(big);
    REQUIRE(j.is_string());
    CHECK(j.get<std::string>() == big.get_str());
}

TEST_CASE("strip_timings removes nested timing fields") {
    Json j;
    j["summary"]["elapsed_ms"] = 12;
    j["summary"]["pass"] = true;
    j["results"] = Json::array({Json{{"elapsed_ms", 5}, {"x", 1}}});
    Json stripped = strip_timings(j);
    CHECK(!stripped["summary"].contains("elapsed_ms"));
    CHECK(!stripped["results"][0].contains("elapsed_ms"));
    CHECK(stripped["summary"]["pass"] == true);
    CHECK(stripped["results"][0]["x"] == 1);
}

TEST_CASE("table text output matches the golden files") {
    auto reports = reports_1_to_8();
    CHECK(render_table_text("framed", reports) == read_file(std::string(GOLDEN_DIR) + "/table_framed.txt"));
    CHECK(render_table_text("critical", reports) ==
          read_file(std::string(GOLDEN_DIR) + "/table_critical.txt"));
}

TEST_CASE("csv emits one row per genus and grading plus totals") {
    auto reports = reports_1_to_8();
    std::string csv = render_table_csv("framed", reports);
    std::istringstream in(csv);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 1 + 8 * 5);  // header + 4 gradings + total per genus
    CHECK(csv.rfind("genus,label,grading,value\n", 0) == 0);
    CHECK(csv.find("4,b_{2+e},2,83\n") != std::string::npos);
}

TEST_CASE("genus report json carries shifted labels and provenance") {
    GenusReport r = build_genus_report(engine(), 3, ReportOptions{});
    Json j = genus_report_json(r);
    CHECK(j["genus"] == 3);
    CHECK(j["epsilon"] == 1);
    CHECK(j["shifted"]["b_{0+e}"] == 29);
    CHECK(j["shifted"]["b_{2+e}"] == 15);
    CHECK(j["shifted"]["n_{0+e}"] == 44);
    CHECK(j["provenance"][0] == "closed_form");
}

TEST_CASE("verification is deterministic for a fixed seed") {
    VerifyBudgets budgets;
    budgets.cap(2);
    auto a = run_verification(engine(), budgets, 42);
    auto b = run_verification(engine(), budgets, 42);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].pass == b[i].pass);
        CHECK(a[i].detail == b[i].detail);
    }
    Json ja = check_results_json(a), jb = check_results_json(b);
    CHECK(strip_timings(ja) == strip_timings(jb));
}

TEST_CASE("small-budget verification passes") {
    VerifyBudgets budgets;
    budgets.cap(2);
    for (const CheckResult& r : run_verification(engine(), budgets, 42)) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("corrupted zeta recursion trips at least one check") {
    Engine corrupted(/*corrupt_zeta=*/true);
    VerifyBudgets budgets;
    budgets.cap(4);
    int failures = 0;
    for (const CheckResult& r : run_verification(corrupted, budgets, 42))
        if (!r.pass) ++failures;
    CHECK(failures >= 1);
}

TEST_CASE("envelope shape") {
    Json config;
    config["seed"] = 42;
    Json envelope = make_envelope("verify", config);
    CHECK(envelope["version"] == kToolVersion);
    CHECK(envelope["command"] == "verify");
    CHECK(envelope["config"]["seed"] == 42);
    CHECK(envelope["results"].is_array());
    CHECK(envelope["summary"].is_object());
    // round-trips losslessly
    Json parsed = Json::parse(envelope.dump());
    CHECK(parsed == envelope);
}
