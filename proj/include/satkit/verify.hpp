#pragma once

// Verification suites over the shipped catalog and the Example-style
// identities. Each check records what was compared so a report can be read
// without rerunning anything.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "satkit/catalog.hpp"

namespace satkit {

struct CheckResult {
    std::string check;
    std::string input;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct VerifyOptions {
    // Parameter for parameterized suites: table1 and wonderful run n = 2..5
    // when unset, example71 runs n = 5.
    std::optional<long> n;
    unsigned jobs = 1;
};

const std::vector<std::string>& verify_suites();

// OutOfRange for an unknown suite name. Checks that throw are recorded as
// failures carrying the error text; output order never depends on jobs.
std::vector<CheckResult> run_suite(const std::string& suite, const Catalog& catalog, const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

nlohmann::ordered_json report_json(const std::vector<CheckResult>& results);
std::string report_text(const std::vector<CheckResult>& results);

}  // namespace satkit
