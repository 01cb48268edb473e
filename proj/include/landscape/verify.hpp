#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "landscape/scc.hpp"

namespace landscape {

/// Randomized equivalence sweep: analytic cluster counts against the
/// brute-force oracle, pairwise connectivity against oracle components,
/// and step-validity of constructed paths.
struct VerifyOptions {
    int n_max = 10;
    std::int64_t cases = 1000;
    std::vector<double> c_list{0.3, 0.5, 0.8, 1.2};
    std::uint64_t seed = 0;
    int pairs_per_case = 3;
    /// Comparability relation used by the analytic side. Tests inject a
    /// corrupted one to prove the harness catches disagreements.
    std::function<bool(const SccDecomposition&, int, int)> comparable_fn;
};

struct VerifyReport {
    std::int64_t cases_run = 0;
    std::int64_t mismatches = 0;
    std::vector<std::string> failures; // one message per mismatch, native formula included
};

VerifyReport run_verification(const VerifyOptions& options);

} // namespace landscape
