#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <fstream>
#include <set>
#include <string>

#include <json.hpp>

#include "eep.h"

using nlohmann::json;

namespace {

json run(int (*fn)(const char*, eep_report**), const char* arg, int expect = EEP_OK) {
    eep_report* report = nullptr;
    const int code = fn(arg, &report);
    REQUIRE(code == expect);
    REQUIRE(report != nullptr);
    json doc = json::parse(std::string(eep_report_json(report), eep_report_size(report)));
    eep_report_free(report);
    return doc;
}

// The schema shipped with the library; used here as a structural contract.
json load_schema() {
    std::ifstream in(EEP_SCHEMA_PATH);
    REQUIRE(in.good());
    return json::parse(in);
}

void check_envelope(const json& doc, const std::string& command) {
    const json schema = load_schema();
    std::set<std::string> known;
    for (const auto& c : schema["properties"]["command"]["enum"])
        known.insert(c.get<std::string>());
    CHECK(known.count(command) == 1);
    for (const auto& key : schema["required"])
        CHECK(doc.contains(key.get<std::string>()));
    CHECK(doc["command"] == command);
    // every required results field from the per-command schema branch exists
    for (const auto& branch : schema["allOf"]) {
        if (branch["if"]["properties"]["command"]["const"] != command) continue;
        const auto& then = branch["then"]["properties"];
        if (then.contains("results") && then["results"].contains("required"))
            for (const auto& key : then["results"]["required"])
                CHECK(doc["results"].contains(key.get<std::string>()));
    }
}

}  // namespace

TEST_CASE("quasipoly report") {
    json doc = run(eep_quasipoly, "2,1,1");
    check_envelope(doc, "quasipoly");
    CHECK(doc["inputs"]["cycle_type"] == json::array({2, 1, 1}));
    CHECK(doc["inputs"]["n"] == 4);
    CHECK(doc["results"]["even"] == json::array({"1", "3", "4"}));
    CHECK(doc["results"]["odd"] == json::array({"0", "2", "4"}));
    CHECK(doc["results"]["even_str"] == "4t^2+3t+1");
    CHECK(doc["results"]["volume"] == "4");
    CHECK(doc["results"]["is_lattice"] == false);
    CHECK(doc["results"]["index"] == 1);
}

TEST_CASE("series and phi reports") {
    json series = run(eep_series, "2,1,1");
    check_envelope(series, "series");
    CHECK(series["results"]["numerator"] == json::array({"1", "5", "15", "9", "2"}));
    CHECK(series["results"]["denominator_factors"] ==
          json::array({json{{"factor", "1-z"}, {"power", 3}},
                       json{{"factor", "1+z"}, {"power", 2}}}));
    CHECK(series["results"]["series_prefix"][0] == "1");
    CHECK(series["results"]["series_prefix"][1] == "6");
    CHECK(series["results"]["series_prefix"][2] == "23");

    json phi = run(eep_phi, "2,1,1");
    check_envelope(phi, "phi");
    CHECK(phi["results"]["is_polynomial"] == false);
    CHECK(phi["results"]["tail"] == json::array({"4"}));
    CHECK(phi["results"]["series_prefix"] ==
          json::array({"1", "4", "11", "-2", "4", "-4", "4", "-4", "4", "-4"}));
}

TEST_CASE("cycle type parsing errors") {
    eep_report* report = nullptr;
    CHECK(eep_quasipoly("", &report) == EEP_ERR_INPUT);
    CHECK(report == nullptr);
    CHECK(std::strlen(eep_last_error()) > 0);
    CHECK(eep_quasipoly("2,x", &report) == EEP_ERR_INPUT);
    CHECK(eep_quasipoly("2,0", &report) == EEP_ERR_INPUT);
    CHECK(eep_quasipoly("2,,1", &report) == EEP_ERR_INPUT);
    CHECK(eep_quasipoly("-3", &report) == EEP_ERR_INPUT);
}

TEST_CASE("table report") {
    eep_report* report = nullptr;
    REQUIRE(eep_table(3, &report) == EEP_OK);
    json doc = json::parse(eep_report_json(report));
    eep_report_free(report);
    check_envelope(doc, "table");
    REQUIRE(doc["results"]["rows"].size() == 3);
    CHECK(doc["results"]["rows"][0]["cycle_type"] == json::array({3}));
    CHECK(doc["results"]["rows"][2]["quasipolynomial"]["even_str"] == "3t^2+3t+1");

    CHECK(eep_table(0, &report) == EEP_ERR_INPUT);
}

TEST_CASE("decompose and verdict reports") {
    eep_report* report = nullptr;
    REQUIRE(eep_decompose(4, 0, &report) == EEP_OK);
    json doc = json::parse(eep_report_json(report));
    eep_report_free(report);
    check_envelope(doc, "decompose");
    CHECK(doc["results"]["is_polynomial"] == false);
    CHECK(doc["results"]["coefficients"][1]["decomposition"]["(4)"] == "3");
    CHECK(doc["results"]["coefficients"][1]["decomposition"]["(3,1)"] == "5");
    CHECK(doc["results"]["tails"].contains("(2,1,1)"));

    REQUIRE(eep_verdict(4, &report) == EEP_OK);
    json verdict = json::parse(eep_report_json(report));
    eep_report_free(report);
    check_envelope(verdict, "verdict");
    CHECK(verdict["results"]["is_polynomial"] == false);
    CHECK(verdict["results"]["is_effective"] == false);
    CHECK(verdict["results"]["nonpolynomial_witness"] == "(2,1,1)");
    CHECK(verdict["results"]["negative_witness"].is_object());

    REQUIRE(eep_verdict(3, &report) == EEP_OK);
    json v3 = json::parse(eep_report_json(report));
    eep_report_free(report);
    CHECK(v3["results"]["is_polynomial"] == true);
    CHECK(v3["results"]["is_effective"] == true);
    CHECK(v3["results"]["nonpolynomial_witness"].is_null());
    CHECK(v3["results"]["negative_witness"].is_null());
}

TEST_CASE("oracle reports") {
    eep_report* report = nullptr;
    REQUIRE(eep_oracle("2,1,1", 1, 0, 0, &report) == EEP_OK);
    json doc = json::parse(eep_report_json(report));
    eep_report_free(report);
    check_envelope(doc, "oracle");
    CHECK(doc["results"]["count"] == "6");
    CHECK(doc["results"]["formula"] == "6");
    CHECK(doc["results"]["match"] == true);

    // budget exceeded surfaces as an input error with a message
    CHECK(eep_oracle("1,1,1", 100, 0, 0, &report) == EEP_ERR_INPUT);
    CHECK(std::strlen(eep_last_error()) > 0);

    REQUIRE(eep_oracle_sweep(4, 3, 0, 0, &report) == EEP_OK);
    json sweep = json::parse(eep_report_json(report));
    eep_report_free(report);
    check_envelope(sweep, "oracle-sweep");
    CHECK(sweep["results"]["match"] == true);
    CHECK(sweep["results"]["checks"].get<long long>() > 0);
    CHECK(sweep["results"]["mismatches"].empty());
}

TEST_CASE("conjecture check reports") {
    eep_report* report = nullptr;
    REQUIRE(eep_check("12.3", 6, &report) == EEP_OK);
    json doc = json::parse(eep_report_json(report));
    eep_report_free(report);
    check_envelope(doc, "check");
    CHECK(doc["results"]["pass"] == true);

    CHECK(eep_check("12.5", 3, &report) == EEP_ERR_INPUT);
    CHECK(eep_check("12.2", 4, &report) == EEP_ERR_INPUT);  // not polynomial
}

TEST_CASE("reports round-trip through the JSON text") {
    json doc = run(eep_phi, "3,1");
    json again = json::parse(doc.dump());
    CHECK(doc == again);
}
