// Verification campaigns: run the per-module law suites against a loaded
// instance in dependency order, skipping suites whose prerequisites
// failed (recorded as skip.* entries, which assert nothing), and emit
// reports. Reports are a pure function of (instance, seed): no clocks,
// no environment, byte-identical JSON across runs.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "xprod/config.hpp"
#include "xprod/report.hpp"

namespace xprod {

// An explicitly requested suite that cannot run on the instance at all
// (unknown name, no involution data, nontrivial sign homomorphism): a
// usage error, distinct from a verification failure.
struct SuiteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// canonical dependency order
const std::vector<std::string>& all_suites();

// Runs the requested suites (all when `suites` is empty) together with
// their prerequisites. When `explicit_suites`, a listed suite whose data
// requirements the instance cannot meet raises SuiteError; under the
// default selection the suite is skipped with a reason instead.
Report run_campaign(const InstanceConfig& cfg, std::vector<std::string> suites,
                    bool explicit_suites);

std::string emit_report_json(const Report& r);
std::string emit_report_text(const Report& r);
Report parse_report_json(const std::string& text);

}  // namespace xprod
