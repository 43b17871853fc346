#include <doctest.h>

#include "primeroots/report.hpp"

using namespace primeroots;

TEST_CASE("csv_escape follows RFC 4180") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("has,comma") == "\"has,comma\"");
    CHECK(csv_escape("has\"quote") == "\"has\"\"quote\"");
    CHECK(csv_escape("line\nbreak") == "\"line\nbreak\"");
    CHECK(csv_escape("") == "");
}

TEST_CASE("report JSON has the fixed document shape") {
    Report report;
    report.task = "audit";
    report.range = {{9, 99}};
    report.params["claim"] = "twin";
    report.examined = 92;
    report.mismatches = 2;
    report.first_mismatch = 13;
    report.counters["strict_mismatches"] = 2;
    report.records.push_back(ordered_json{{"claim", "twin_stage2"}, {"M", 13}});

    auto doc = ordered_json::parse(report.to_json());
    CHECK(doc["task"] == "audit");
    CHECK(doc["range"]["lo"] == 9);
    CHECK(doc["range"]["hi"] == 99);
    CHECK(doc["params"]["claim"] == "twin");
    CHECK(doc["summary"]["examined"] == 92);
    CHECK(doc["summary"]["mismatches"] == 2);
    CHECK(doc["summary"]["first_mismatch"] == 13);
    CHECK(doc["summary"]["strict_mismatches"] == 2);
    CHECK(doc["summary"]["records_elided"] == 0);
    REQUIRE(doc["records"].size() == 1);
    CHECK(doc["records"][0]["M"] == 13);

    // key order is pinned
    auto keys = std::vector<std::string>{};
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"task", "range", "params", "summary", "records"});
}

TEST_CASE("report JSON with no first mismatch serializes null") {
    Report report;
    report.task = "sieve";
    report.range = {{0, 10}};
    auto doc = ordered_json::parse(report.to_json());
    CHECK(doc["summary"]["first_mismatch"].is_null());
}

TEST_CASE("report CSV emits header plus one line per record") {
    Report report;
    report.task = "twins";
    report.columns = {"p", "q"};
    report.records.push_back(ordered_json{{"p", 3}, {"q", 5}});
    report.records.push_back(ordered_json{{"p", 5}, {"q", 7}});
    CHECK(report.to_csv() == "p,q\n3,5\n5,7\n");
}

TEST_CASE("report CSV renders null, bool, and quoted fields") {
    Report report;
    report.task = "propc";
    report.columns = {"n", "min_k", "note", "match"};
    report.records.push_back(ordered_json{
        {"n", 4}, {"min_k", nullptr}, {"note", "needs,quoting"}, {"match", true}});
    CHECK(report.to_csv() == "n,min_k,note,match\n4,,\"needs,quoting\",true\n");
}

TEST_CASE("exit code reflects mismatches") {
    Report report;
    CHECK(report.exit_code() == 0);
    report.mismatches = 1;
    CHECK(report.exit_code() == 1);
}
