#pragma once

#include <string>
#include <vector>

namespace qsh {

struct VerifyOptions {
    long long terms = 1'000'000;
    double tol = 1e-5;
    double zeros_tol = 1e-4;
    unsigned seed = 7349;
};

struct SuiteCase {
    std::string name;
    bool numeric = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    int cases_run = 0;
    double seconds = 0.0;
    std::vector<SuiteCase> failures;
    bool exact_failure = false;
    bool numeric_failure = false;
};

const std::vector<std::string>& suite_names();

/// Runs one named suite ("all" aggregates every suite).
std::vector<SuiteReport> run_suites(const std::string& name, const VerifyOptions& opts);

/// 0 all green, 3 only numeric-tolerance failures, 1 any exact failure.
int report_exit_code(const std::vector<SuiteReport>& reports);

}  // namespace qsh
