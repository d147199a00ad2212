#pragma once

#include <string>
#include <vector>

namespace wavediff {

struct VerifyOptions {
    int threads = 1;
    bool inject_fault = false;  // harness self-test: perturbs one closed form
    std::string filter;         // run only checks whose name contains this
};

// Outcome of one verification check.  `measured` is the worst observed
// quantity, `bound` what it was held against, `margin` = bound - measured.
struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double bound = 0.0;
    double margin = 0.0;
    double seconds = 0.0;
    std::string detail;
};

std::vector<std::string> verify_check_names();

// Runs the full verification suite in order; never throws on a failing
// check (failures are reported), only on internal errors.
std::vector<CheckResult> run_verification(const VerifyOptions& opts = {});

}  // namespace wavediff
