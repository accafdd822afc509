#pragma once

#include <string>
#include <vector>

#include "umemura/analysis.hpp"
#include "umemura/json_io.hpp"
#include "umemura/verify.hpp"
#include "umemura/wronskian.hpp"

namespace umemura {

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass = true;
};

// Registered suite names, "all" included last.
std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);

// Runs one suite; max_n < 0 selects the suite's own default depth.  Checks
// are independent and run concurrently; the aggregated order is
// deterministic (sorted by name, then n).
SuiteReport run_suite(const std::string& name, int max_n = -1);

Json suite_report_to_json(const SuiteReport& report);

}  // namespace umemura
