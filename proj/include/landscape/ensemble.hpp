#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "landscape/cluster.hpp"
#include "landscape/core.hpp"
#include "landscape/digraph.hpp"

namespace landscape {

/// One Monte Carlo campaign: random formulas with each of the
/// M = 2n(n-1) possible incompatibilities present independently with
/// probability p = c/(2n).
struct EnsembleConfig {
    int n = 0;
    double c = 0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    int max_cycle_len = 6; // truncation index m of the cycle census
};

struct TrialRecord {
    std::int64_t trial_index = 0;
    bool satisfiable = false;
    std::int64_t m_clauses = 0;
    int y = 0;                       // splitting-pair count (0 when unsatisfiable)
    std::vector<std::int64_t> x;     // x[i] = complementary i-cycle pairs, i = 0..m (0,1 unused)
    std::int64_t t = 0;              // sum of x[2..m]
    std::int64_t comparable_pairs = 0;
    int log2_clusters = 0;           // y when satisfiable, -1 otherwise
};

struct TheoryValues {
    int n = 0;
    double c = 0;
    int m = 0;
    std::optional<double> lambda_inf;          // only for 0 < c < 1
    std::optional<double> unique_cluster_prob; // sqrt((1-c) e^c)
    double lambda_n_full = 0;                  // sum of mu_{i,n}, i = 2..n
    double lambda_n_truncated = 0;             // sum of mu_{i,n}, i = 2..m
    std::vector<double> mu;                    // mu[i] for i = 0..m (0,1 unused)
};

/// -1/2 (ln(1-c) + c); throws unless 0 < c < 1.
double lambda_infinity(double c);
/// Expected complementary i-cycle pairs, ((n)_i / i) 2^(i-1) p^i.
double expected_cycle_pairs(int n, double c, int i);
TheoryValues theory_values(int n, double c, int m);

/// Draws a clause count from Binomial(M, p), then that many distinct
/// incompatibilities uniformly. Distributionally identical to the
/// per-pair Bernoulli sweep.
Formula sample_formula(int n, double c, std::mt19937_64& rng);

/// Counts complementary pairs of simple directed cycles on strictly
/// distinct alleles, per length 2..m; each pair counted once. Returned
/// vector is indexed by cycle length (entries 0 and 1 stay zero).
std::vector<std::int64_t> cycle_census(const ImplicationDigraph& d, int m);

/// Nontrivial complementary component pairs that ARE related in the
/// condensation order (each unordered pair counted once).
std::int64_t comparable_pair_count(const SccDecomposition& s);

struct CampaignSummary {
    EnsembleConfig config;
    std::int64_t sat_count = 0;
    std::vector<std::int64_t> y_histogram;         // index j = trials with Y = j
    std::vector<std::int64_t> y_histogram_sat;     // same, satisfiable trials only
    double mean_m_clauses = 0;
    std::vector<double> mean_x;                    // index by cycle length
    std::vector<double> stderr_x;
    double mean_comparable_pairs = 0;
    double stderr_comparable_pairs = 0;
    TheoryValues theory;
};

struct CampaignResult {
    std::vector<TrialRecord> records;
    CampaignSummary summary;
};

/// Runs cfg.trials independent trials. Honors LANDSCAPE_THREADS as a cap
/// on worker threads; results are bit-identical for any thread count.
CampaignResult run_campaign(const EnsembleConfig& cfg);

struct DistributionComparison {
    double lambda = 0;
    std::int64_t sample_size = 0;
    std::vector<double> deviation; // |P-hat(Y=j) - pmf(j)| for j = 0..4, then pooled tail
    double chi2 = 0;
    int dof = 0;
    double p_value = 0;
};

/// Per-bin deviations of an empirical Y histogram from Poisson(lambda),
/// plus a chi-squared statistic (bins pooled so expected counts stay
/// above 5). Thresholds are the caller's business.
DistributionComparison compare_distributions(const std::vector<std::int64_t>& y_histogram,
                                             double lambda);

} // namespace landscape
