#include "landscape/ensemble.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

#include "landscape/rng.hpp"
#include "landscape/scc.hpp"
#include "landscape/stats.hpp"

namespace landscape {

double lambda_infinity(double c) {
    if (!(c > 0.0 && c < 1.0))
        throw std::invalid_argument("lambda defined only for 0 < c < 1");
    return -0.5 * (std::log1p(-c) + c);
}

double expected_cycle_pairs(int n, double c, int i) {
    if (i < 2 || i > n)
        return 0.0;
    const double p = c / (2.0 * n);
    double product = 1.0; // (n)_i * (2p)^i
    for (int l = 0; l < i; ++l)
        product *= 2.0 * p * (n - l);
    return product / (2.0 * i);
}

TheoryValues theory_values(int n, double c, int m) {
    if (n < 1 || m < 2)
        throw std::invalid_argument("theory_values requires n >= 1, m >= 2");
    TheoryValues t;
    t.n = n;
    t.c = c;
    t.m = m;
    if (c > 0.0 && c < 1.0) {
        t.lambda_inf = lambda_infinity(c);
        t.unique_cluster_prob = std::sqrt((1.0 - c) * std::exp(c));
    }
    t.mu.assign(static_cast<std::size_t>(m) + 1, 0.0);
    const double p = c / (2.0 * n);
    double product = 1.0;
    for (int i = 1; i <= n; ++i) {
        product *= 2.0 * p * (n - (i - 1));
        if (i < 2)
            continue;
        const double mu_i = product / (2.0 * i);
        if (i <= m) {
            t.mu[static_cast<std::size_t>(i)] = mu_i;
            t.lambda_n_truncated += mu_i;
        }
        t.lambda_n_full += mu_i;
        if (mu_i < 1e-18 * (t.lambda_n_full + 1.0) && 2.0 * p * n < 1.0)
            break; // geometric tail below double precision
    }
    return t;
}

Formula sample_formula(int n, double c, std::mt19937_64& rng) {
    if (n < 1)
        throw std::invalid_argument("sample_formula requires n >= 1");
    const double p = c / (2.0 * n);
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("p = c/(2n) must lie in [0, 1]");
    Formula f;
    f.n = n;
    if (n < 2 || p == 0.0)
        return f;

    const std::uint64_t universe = 2ull * n * (n - 1ull);
    std::binomial_distribution<std::int64_t> clause_count(
        static_cast<std::int64_t>(universe), p);
    const std::int64_t m = clause_count(rng);

    std::uniform_int_distribution<int> first_locus(0, n - 1);
    std::uniform_int_distribution<int> other_locus(0, n - 2);
    std::uniform_int_distribution<int> coin(0, 1);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(2 * m));
    f.clauses.reserve(static_cast<std::size_t>(m));
    while (static_cast<std::int64_t>(f.clauses.size()) < m) {
        const int a = first_locus(rng);
        int b = other_locus(rng);
        if (b >= a)
            ++b;
        const Incompatibility inc = make_incompatibility(
            Literal{a, coin(rng)}, Literal{b, coin(rng)});
        const std::uint64_t key =
            (static_cast<std::uint64_t>(vertex_of(inc.first)) << 32) |
            static_cast<std::uint64_t>(vertex_of(inc.second));
        if (seen.insert(key).second)
            f.clauses.push_back(inc);
    }
    std::sort(f.clauses.begin(), f.clauses.end());
    return f;
}

namespace {

// Bounded DFS for simple cycles with all loci distinct. The start vertex
// is the smallest on its cycle; a cycle pair is counted from the cycle
// holding the globally smallest vertex of the union.
struct CycleCounter {
    const ImplicationDigraph& d;
    int max_len;
    std::vector<std::int64_t>& counts;
    std::vector<std::uint8_t> locus_used;
    int start = 0;
    int min_complement = 0;

    CycleCounter(const ImplicationDigraph& digraph, int m,
                 std::vector<std::int64_t>& out)
        : d(digraph), max_len(m), counts(out),
          locus_used(static_cast<std::size_t>(digraph.locus_count()), 0) {}

    void run() {
        for (start = 0; start < d.vertex_count(); ++start) {
            locus_used[static_cast<std::size_t>(start >> 1)] = 1;
            min_complement = start ^ 1;
            extend(start, 1);
            locus_used[static_cast<std::size_t>(start >> 1)] = 0;
        }
    }

    void extend(int v, int depth) {
        for (int w : d.out(v)) {
            if (w == start) {
                if (depth >= 2 && start < min_complement)
                    ++counts[static_cast<std::size_t>(depth)];
                continue;
            }
            if (w <= start || depth >= max_len ||
                locus_used[static_cast<std::size_t>(w >> 1)])
                continue;
            locus_used[static_cast<std::size_t>(w >> 1)] = 1;
            const int saved = min_complement;
            min_complement = std::min(min_complement, w ^ 1);
            extend(w, depth + 1);
            min_complement = saved;
            locus_used[static_cast<std::size_t>(w >> 1)] = 0;
        }
    }
};

} // namespace

std::vector<std::int64_t> cycle_census(const ImplicationDigraph& d, int m) {
    if (m < 2)
        throw std::invalid_argument("cycle census requires m >= 2");
    std::vector<std::int64_t> counts(static_cast<std::size_t>(m) + 1, 0);
    CycleCounter counter(d, m, counts);
    counter.run();
    return counts;
}

std::int64_t comparable_pair_count(const SccDecomposition& s) {
    std::int64_t count = 0;
    for (int c = 0; c < s.component_count(); ++c) {
        if (!s.nontrivial(c))
            continue;
        const int cc = s.complement_of(c);
        if (cc == c || s.min_vertex(c) > s.min_vertex(cc))
            continue;
        if (comparable(s, c, cc))
            ++count;
    }
    return count;
}

namespace {

TrialRecord run_trial(const EnsembleConfig& cfg, std::int64_t trial) {
    auto rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(trial));
    const Formula f = sample_formula(cfg.n, cfg.c, rng);
    const ImplicationDigraph d = build_digraph(f);
    const SccDecomposition s = scc(d);

    TrialRecord r;
    r.trial_index = trial;
    r.m_clauses = static_cast<std::int64_t>(f.clauses.size());
    r.satisfiable = is_satisfiable(s);
    r.x = cycle_census(d, cfg.max_cycle_len);
    for (std::int64_t xi : r.x)
        r.t += xi;
    r.comparable_pairs = comparable_pair_count(s);
    if (r.satisfiable) {
        r.y = static_cast<int>(splitting_pairs(s).size());
        r.log2_clusters = r.y;
    } else {
        r.y = 0;
        r.log2_clusters = -1;
    }
    return r;
}

int worker_count(std::int64_t trials) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0)
        hw = 1;
    if (const char* env = std::getenv("LANDSCAPE_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && cap < static_cast<long>(hw))
            hw = static_cast<unsigned>(cap);
    }
    return static_cast<int>(std::min<std::int64_t>(hw, trials));
}

void accumulate(const std::vector<double>& samples, double& mean, double& se) {
    const MeanEstimate e = mean_estimate(samples);
    mean = e.mean;
    se = e.std_error;
}

} // namespace

CampaignResult run_campaign(const EnsembleConfig& cfg) {
    if (cfg.trials < 1)
        throw std::invalid_argument("campaign requires trials >= 1");
    if (cfg.max_cycle_len < 2)
        throw std::invalid_argument("campaign requires max_cycle_len >= 2");

    CampaignResult result;
    result.records.resize(static_cast<std::size_t>(cfg.trials));

    const int workers = worker_count(cfg.trials);
    if (workers <= 1) {
        for (std::int64_t t = 0; t < cfg.trials; ++t)
            result.records[static_cast<std::size_t>(t)] = run_trial(cfg, t);
    } else {
        std::atomic<std::int64_t> next{0};
        auto work = [&] {
            for (;;) {
                const std::int64_t t = next.fetch_add(1);
                if (t >= cfg.trials)
                    return;
                result.records[static_cast<std::size_t>(t)] = run_trial(cfg, t);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i)
            pool.emplace_back(work);
        for (std::thread& th : pool)
            th.join();
    }

    CampaignSummary& sum = result.summary;
    sum.config = cfg;
    sum.theory = theory_values(cfg.n, cfg.c, cfg.max_cycle_len);
    std::vector<std::vector<double>> x_samples(
        static_cast<std::size_t>(cfg.max_cycle_len) + 1);
    std::vector<double> comp_samples;
    comp_samples.reserve(result.records.size());
    double clause_total = 0;
    for (const TrialRecord& r : result.records) {
        if (static_cast<std::size_t>(r.y) >= sum.y_histogram.size()) {
            sum.y_histogram.resize(static_cast<std::size_t>(r.y) + 1, 0);
            sum.y_histogram_sat.resize(static_cast<std::size_t>(r.y) + 1, 0);
        }
        ++sum.y_histogram[static_cast<std::size_t>(r.y)];
        if (r.satisfiable) {
            ++sum.y_histogram_sat[static_cast<std::size_t>(r.y)];
            ++sum.sat_count;
        }
        clause_total += static_cast<double>(r.m_clauses);
        for (int i = 2; i <= cfg.max_cycle_len; ++i)
            x_samples[static_cast<std::size_t>(i)].push_back(
                static_cast<double>(r.x[static_cast<std::size_t>(i)]));
        comp_samples.push_back(static_cast<double>(r.comparable_pairs));
    }
    if (sum.y_histogram.empty()) {
        sum.y_histogram.resize(1, 0);
        sum.y_histogram_sat.resize(1, 0);
    }
    sum.mean_m_clauses = clause_total / static_cast<double>(cfg.trials);
    sum.mean_x.assign(static_cast<std::size_t>(cfg.max_cycle_len) + 1, 0.0);
    sum.stderr_x.assign(static_cast<std::size_t>(cfg.max_cycle_len) + 1, 0.0);
    for (int i = 2; i <= cfg.max_cycle_len; ++i)
        accumulate(x_samples[static_cast<std::size_t>(i)],
                   sum.mean_x[static_cast<std::size_t>(i)],
                   sum.stderr_x[static_cast<std::size_t>(i)]);
    accumulate(comp_samples, sum.mean_comparable_pairs, sum.stderr_comparable_pairs);
    return result;
}

DistributionComparison compare_distributions(const std::vector<std::int64_t>& y_histogram,
                                             double lambda) {
    DistributionComparison cmp;
    cmp.lambda = lambda;
    for (std::int64_t n : y_histogram)
        cmp.sample_size += n;
    if (cmp.sample_size < 1000)
        throw std::invalid_argument("distribution comparison needs >= 1000 samples");
    const double total = static_cast<double>(cmp.sample_size);

    auto observed = [&](int j) {
        return static_cast<std::size_t>(j) < y_histogram.size()
                   ? static_cast<double>(y_histogram[static_cast<std::size_t>(j)])
                   : 0.0;
    };

    double head_prob = 0;
    double head_obs = 0;
    for (int j = 0; j <= 4; ++j) {
        const double pmf = poisson_pmf(j, lambda);
        cmp.deviation.push_back(std::fabs(observed(j) / total - pmf));
        head_prob += pmf;
        head_obs += observed(j);
    }
    cmp.deviation.push_back(
        std::fabs((total - head_obs) / total - (1.0 - head_prob)));

    // chi-squared bins: 0,1,2,... pooled once the expected count drops
    // under 5; the reference distribution is fully specified, so
    // dof = bins - 1
    std::vector<double> expected, obs;
    double tail_prob = 1.0;
    int j = 0;
    while (true) {
        const double e = poisson_pmf(j, lambda) * total;
        if (e < 5.0 || j > 64)
            break;
        expected.push_back(e);
        obs.push_back(observed(j));
        tail_prob -= poisson_pmf(j, lambda);
        ++j;
    }
    double tail_obs = 0;
    for (std::size_t jj = static_cast<std::size_t>(j); jj < y_histogram.size(); ++jj)
        tail_obs += static_cast<double>(y_histogram[jj]);
    if (expected.size() < 2) {
        // degenerate lambda; compare bin 0 against everything else
        expected.assign({poisson_pmf(0, lambda) * total,
                         (1.0 - poisson_pmf(0, lambda)) * total});
        obs.assign({observed(0), total - observed(0)});
    } else {
        expected.push_back(tail_prob * total);
        obs.push_back(tail_obs);
        if (expected.back() < 5.0 && expected.size() > 2) {
            expected[expected.size() - 2] += expected.back();
            obs[obs.size() - 2] += obs.back();
            expected.pop_back();
            obs.pop_back();
        }
    }
    cmp.chi2 = 0;
    for (std::size_t b = 0; b < expected.size(); ++b) {
        const double diff = obs[b] - expected[b];
        cmp.chi2 += diff * diff / expected[b];
    }
    cmp.dof = static_cast<int>(expected.size()) - 1;
    cmp.p_value = chi_squared_sf(cmp.chi2, cmp.dof);
    return cmp;
}

} // namespace landscape
