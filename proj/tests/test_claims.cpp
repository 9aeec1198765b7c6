#include <doctest.h>

#include <algorithm>

#include "hoi/claims.hpp"

using namespace hoi::claims;

TEST_CASE("full run passes with exactly one known discrepancy") {
    const Options opt;
    const auto reports = run_suite("all", opt);
    REQUIRE_FALSE(reports.empty());
    CHECK(std::is_sorted(reports.begin(), reports.end(),
                         [](const ClaimReport& a, const ClaimReport& b) { return a.id < b.id; }));

    int discrepancies = 0;
    for (const ClaimReport& r : reports) {
        INFO(r.id);
        CHECK(r.status != Status::Fail);
        if (r.status == Status::Discrepancy) {
            ++discrepancies;
            CHECK(r.id == "COLL-ERR");
        }
    }
    CHECK(discrepancies == 1);
    CHECK_FALSE(any_failed(reports));
}

TEST_CASE("suite names select disjoint id prefixes") {
    const Options opt;
    for (const auto& [suite, prefix] :
         {std::pair<std::string, std::string>{"sorkin", "SORKIN-"},
          {"dc", "DC-"},
          {"collision", "COLL-"},
          {"qqt", "QQT-"}}) {
        const auto reports = run_suite(suite, opt);
        REQUIRE_FALSE(reports.empty());
        for (const ClaimReport& r : reports) CHECK(r.id.starts_with(prefix));
    }
    CHECK_THROWS_AS(run_suite("bogus", opt), std::invalid_argument);
}

TEST_CASE("an empty whitelist turns the discrepancy into a failure") {
    Options opt;
    opt.discrepancy_whitelist.clear();
    const auto reports = run_suite("collision", opt);
    bool failed = false;
    for (const ClaimReport& r : reports)
        if (r.id == "COLL-ERR") failed = r.status == Status::Fail;
    CHECK(failed);
    CHECK(any_failed(reports));
}

TEST_CASE("output is deterministic for a fixed seed") {
    const Options opt;
    const std::string a = to_json(run_suite("all", opt)).dump(2);
    const std::string b = to_json(run_suite("all", opt)).dump(2);
    CHECK(a == b);
}

TEST_CASE("report schema") {
    const Options opt;
    const nlohmann::json j = to_json(run_suite("sorkin", opt));
    REQUIRE(j.is_array());
    for (const auto& item : j) {
        for (const char* key : {"id", "description", "paper_location", "computed", "expected",
                                "provenance", "tolerance", "status"})
            CHECK(item.contains(key));
        CHECK((item["status"] == "PASS" || item["status"] == "FAIL" ||
               item["status"] == "DISCREPANCY"));
        CHECK((item["provenance"] == "PAPER" || item["provenance"] == "TRIVIAL" ||
               item["provenance"] == "DERIVED"));
    }

    const std::string md = to_markdown(run_suite("sorkin", opt));
    CHECK(md.find("PASS") != std::string::npos);
    CHECK(md.find("SORKIN-I2") != std::string::npos);
}

TEST_CASE("checklist shape") {
    const auto rows = checklist();
    CHECK(rows.size() == 6);
    for (const ChecklistRow& row : rows) {
        CHECK_FALSE(row.desideratum.empty());
        for (const std::string& v : {row.dc_verdict, row.qqt_verdict})
            CHECK((v == "yes" || v == "no" || v == "?"));
    }
    const nlohmann::json j = checklist_json();
    CHECK(j.is_array());
    CHECK(j.size() == 6);
    CHECK_FALSE(checklist_markdown().empty());
}
