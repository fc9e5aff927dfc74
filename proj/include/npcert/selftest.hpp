#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace npcert {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // deterministic for a fixed seed; no timings
    double seconds = 0.0;
};

/// Runs the full verification suite with a fixed random seed. Every check
/// is exact; randomized checks tolerate zero failures.
std::vector<CheckResult> run_selftest(std::uint64_t seed);

/// Prints one pass/fail line per check (timings only when show_timings)
/// and returns the number of failed checks.
int report_selftest(const std::vector<CheckResult>& results, std::ostream& out, bool show_timings);

} // namespace npcert
