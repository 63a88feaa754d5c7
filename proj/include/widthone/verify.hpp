#ifndef WIDTHONE_VERIFY_HPP
#define WIDTHONE_VERIFY_HPP

#include "widthone/guards.hpp"

#include <string>
#include <vector>

namespace widthone {

/// Grid bounds for the identity suite. The defaults cover every identity
/// the library relies on and finish in seconds on one core.
struct VerifyScope {
    int max_d = 3;           // rank bound for the sum and shelling grids
    int max_n = 3;           // per-axis extent bound
    int max_s = 4;           // entry-sum bound
    int eulerian_total = 8;  // parts-sum bound for brute-vs-closed sweeps
    int macmahon_total = 6;  // parts-sum bound for the series check
    int series_len = 10;     // prefix length L for series comparisons
    bool inject_fault = false; // self-test hook: corrupt one expected value
    Guards guards{};
};

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail; // first counterexample when failing, empty otherwise
};

/// Runs every identity check over the scoped grids, in a fixed order.
/// Mathematical disagreement never throws; it comes back as a failed
/// result carrying the first counterexample. Guard violations from an
/// oversized scope still throw GuardError.
std::vector<CheckResult> run_verification(const VerifyScope& scope);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace widthone

#endif
