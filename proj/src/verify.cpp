#include "landscape/verify.hpp"

#include <sstream>

#include "landscape/cluster.hpp"
#include "landscape/ensemble.hpp"
#include "landscape/io.hpp"
#include "landscape/oracle.hpp"
#include "landscape/rng.hpp"

namespace landscape {

namespace {

using ComparableFn = std::function<bool(const SccDecomposition&, int, int)>;

// splitting-pair count under an injectable comparability relation
int splitting_pair_count(const SccDecomposition& s, const ComparableFn& related) {
    int k = 0;
    for (int c = 0; c < s.component_count(); ++c) {
        if (!s.nontrivial(c))
            continue;
        const int cc = s.complement_of(c);
        if (s.min_vertex(c) > s.min_vertex(cc))
            continue;
        if (!related(s, c, cc))
            ++k;
    }
    return k;
}

bool path_is_valid(const std::vector<Genotype>& path, const Genotype& u,
                   const Genotype& v, const Formula& f) {
    if (path.empty() || !(path.front() == u) || !(path.back() == v))
        return false;
    for (const Genotype& g : path)
        if (!is_viable(g, f))
            return false;
    for (std::size_t i = 1; i < path.size(); ++i)
        if (differing_loci(path[i - 1], path[i]).size() != 1)
            return false;
    return true;
}

} // namespace

VerifyReport run_verification(const VerifyOptions& options) {
    VerifyReport report;
    if (options.cases <= 0)
        return report;
    const ComparableFn related =
        options.comparable_fn
            ? options.comparable_fn
            : [](const SccDecomposition& s, int a, int b) { return comparable(s, a, b); };

    for (std::int64_t case_index = 0; case_index < options.cases; ++case_index) {
        auto rng = trial_rng(options.seed, static_cast<std::uint64_t>(case_index));
        std::uniform_int_distribution<int> pick_n(2, options.n_max);
        const int n = pick_n(rng);
        const double c =
            options.c_list[static_cast<std::size_t>(case_index) % options.c_list.size()];
        const Formula f = sample_formula(n, c, rng);
        ++report.cases_run;

        auto fail = [&](const std::string& what) {
            ++report.mismatches;
            std::ostringstream msg;
            msg << "case " << case_index << " (n=" << n << ", c=" << c << "): "
                << what << "\n" << render_native(f);
            report.failures.push_back(msg.str());
        };

        const oracle::ViableSubgraph truth = oracle::enumerate(f);
        const SccDecomposition s = scc(build_digraph(f));
        const bool sat = is_satisfiable(s);
        if (sat != (truth.viable_count > 0)) {
            fail("satisfiability disagrees with oracle");
            continue;
        }
        const std::uint64_t analytic_clusters =
            sat ? std::uint64_t{1} << splitting_pair_count(s, related) : 0;
        if (analytic_clusters != static_cast<std::uint64_t>(truth.component_count)) {
            fail("cluster count " + std::to_string(analytic_clusters) +
                 " != oracle component count " +
                 std::to_string(truth.component_count));
            continue;
        }
        if (!sat || truth.viable_count == 0)
            continue;

        const std::vector<std::uint64_t> codes = oracle::viable_codes(truth);
        std::uniform_int_distribution<std::size_t> pick_code(0, codes.size() - 1);
        for (int pair = 0; pair < options.pairs_per_case; ++pair) {
            const Genotype u = Genotype::from_code(codes[pick_code(rng)], n);
            const Genotype v = Genotype::from_code(codes[pick_code(rng)], n);
            const bool expected = oracle::connected(truth, u, v);
            if (same_cluster(u, v, f) != expected) {
                fail("same_cluster(" + u.str() + ", " + v.str() +
                     ") disagrees with oracle (expected " +
                     (expected ? "true" : "false") + ")");
                break;
            }
            const auto path = find_path(u, v, f);
            if (expected) {
                if (!path || !path_is_valid(*path, u, v, f)) {
                    fail("find_path(" + u.str() + ", " + v.str() +
                         ") missing or invalid");
                    break;
                }
            } else if (path) {
                fail("find_path(" + u.str() + ", " + v.str() +
                     ") returned a path across clusters");
                break;
            }
        }
    }
    return report;
}

} // namespace landscape
