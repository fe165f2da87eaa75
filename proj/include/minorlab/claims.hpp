#ifndef MINORLAB_CLAIMS_HPP
#define MINORLAB_CLAIMS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace minorlab {

enum class ClaimStatus { Pass, Fail, Refused };

struct ClaimOutcome {
    ClaimStatus status = ClaimStatus::Fail;
    std::string computed;
    std::string expected;
    uint64_t nodes = 0;
    uint64_t refusals = 0;
};

struct ClaimSpec {
    std::string id;          // stable key, e.g. "sobs-k44"
    std::string criterion;   // acceptance criterion group, e.g. "c1"
    std::string suite;       // "paper" or "smoke" ("full" runs everything)
    std::string statement;   // human-readable expectation
    uint64_t budget = 0;     // node budget for searches, 0 = module default
    std::function<ClaimOutcome(uint64_t budget)> run;
};

struct Report {
    std::string claim_id;
    ClaimStatus status;
    std::string computed;
    std::string expected;
    uint64_t nodes = 0;
    uint64_t refusals = 0;
    int64_t runtime_ms = 0;
};

const std::vector<ClaimSpec>& claim_registry();

Report run_claim(const ClaimSpec& spec);

/// Runs the named suite ("paper", "smoke", "full") or a single criterion
/// group ("c1".."c10"); throws std::invalid_argument for unknown names.
std::vector<Report> verify_suite(const std::string& suite);

std::string reports_to_json(const std::vector<Report>& reports);
std::string reports_to_csv(const std::vector<Report>& reports);
std::string registry_to_json();

/// 0 all pass, 1 some fail, 2 refusals but no fail.
int exit_code_for(const std::vector<Report>& reports);

}  // namespace minorlab

#endif
