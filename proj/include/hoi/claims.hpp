#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace hoi::claims {

enum class Provenance { Paper, Trivial, Derived };
enum class Status { Pass, Fail, Discrepancy };

std::string to_string(Provenance p);
std::string to_string(Status s);

/// One audited claim: what was computed, what was expected and where the
/// expectation comes from, and whether they agree at the claim's
/// tolerance. A DISCREPANCY is a whitelisted, known inconsistency in the
/// source material, not a failure of this code.
struct ClaimReport {
    std::string id;
    std::string description;
    std::string paper_location;
    nlohmann::json computed;
    nlohmann::json expected;
    Provenance provenance = Provenance::Trivial;
    double tolerance = 1e-10;
    Status status = Status::Fail;
};

struct Options {
    std::uint64_t seed = 42;
    double tol = 1e-10;
    /// Claims allowed to carry status DISCREPANCY instead of FAIL.
    std::set<std::string> discrepancy_whitelist = {"COLL-ERR"};
};

std::vector<ClaimReport> run_sorkin_suite(const Options& opt);
std::vector<ClaimReport> run_dc_suite(const Options& opt);
std::vector<ClaimReport> run_collision_suite(const Options& opt);
std::vector<ClaimReport> run_qqt_suite(const Options& opt);

/// Runs one of {all, sorkin, dc, collision, qqt}; throws
/// std::invalid_argument on an unknown suite name. Reports are sorted by
/// id.
std::vector<ClaimReport> run_suite(const std::string& suite, const Options& opt);

nlohmann::json to_json(const std::vector<ClaimReport>& reports);
std::string to_markdown(const std::vector<ClaimReport>& reports);

bool any_failed(const std::vector<ClaimReport>& reports);

/// One row of the conclusion checklist: a desideratum and the verdict each
/// theory earned, with the claim ids that substantiate the cell.
struct ChecklistRow {
    std::string desideratum;
    std::string dc_verdict;    // "yes", "?", or "no"
    std::string dc_claims;
    std::string dc_note;
    std::string qqt_verdict;
    std::string qqt_claims;
    std::string qqt_note;
};

std::vector<ChecklistRow> checklist();
nlohmann::json checklist_json();
std::string checklist_markdown();

}  // namespace hoi::claims
