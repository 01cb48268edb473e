#include "landscape/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "landscape/scc.hpp"

namespace landscape {

std::string campaign_csv(const CampaignResult& result) {
    const int m = result.summary.config.max_cycle_len;
    std::ostringstream out;
    out << "trial,satisfiable,m_clauses,Y,T";
    for (int i = 2; i <= m; ++i)
        out << ",X" << i;
    out << ",comparable_pairs,log2_clusters\n";
    for (const TrialRecord& r : result.records) {
        out << r.trial_index << ',' << (r.satisfiable ? 1 : 0) << ','
            << r.m_clauses << ',' << r.y << ',' << r.t;
        for (int i = 2; i <= m; ++i)
            out << ',' << r.x[static_cast<std::size_t>(i)];
        out << ',' << r.comparable_pairs << ',' << r.log2_clusters << '\n';
    }
    return out.str();
}

nlohmann::json campaign_summary_json(const CampaignResult& result) {
    const CampaignSummary& s = result.summary;
    const double trials = static_cast<double>(s.config.trials);
    nlohmann::json j;
    j["config"] = {{"n", s.config.n},
                   {"c", s.config.c},
                   {"trials", s.config.trials},
                   {"seed", s.config.seed},
                   {"max_cycle_len", s.config.max_cycle_len}};
    j["sat_count"] = s.sat_count;
    j["sat_fraction"] = static_cast<double>(s.sat_count) / trials;
    j["unsat_fraction"] = 1.0 - static_cast<double>(s.sat_count) / trials;
    j["y_histogram"] = s.y_histogram;
    j["y_histogram_sat"] = s.y_histogram_sat;
    j["mean_m_clauses"] = s.mean_m_clauses;
    j["mean_comparable_pairs"] = s.mean_comparable_pairs;
    j["stderr_comparable_pairs"] = s.stderr_comparable_pairs;

    nlohmann::json x;
    for (int i = 2; i <= s.config.max_cycle_len; ++i) {
        x[std::to_string(i)] = {{"mean", s.mean_x[static_cast<std::size_t>(i)]},
                                {"stderr", s.stderr_x[static_cast<std::size_t>(i)]},
                                {"expected", s.theory.mu[static_cast<std::size_t>(i)]}};
    }
    j["cycle_pairs"] = x;

    nlohmann::json theory;
    theory["lambda_n"] = s.theory.lambda_n_full;
    theory["lambda_n_truncated"] = s.theory.lambda_n_truncated;
    if (s.theory.lambda_inf) {
        theory["lambda_inf"] = *s.theory.lambda_inf;
        theory["unique_cluster_prob"] = *s.theory.unique_cluster_prob;
    }
    j["theory"] = theory;

    if (s.config.c > 0.0 && s.config.c < 1.0 && s.config.trials >= 1000) {
        const DistributionComparison cmp =
            compare_distributions(s.y_histogram, s.theory.lambda_n_full);
        nlohmann::json comparison;
        comparison["deviations"] = cmp.deviation;
        comparison["chi2"] = cmp.chi2;
        comparison["dof"] = cmp.dof;
        comparison["p_value"] = cmp.p_value;
        nlohmann::json predicted;
        for (int jj = 0; jj <= 4; ++jj)
            predicted.push_back(poisson_pmf(jj, cmp.lambda));
        comparison["poisson_pmf"] = predicted;
        j["poisson_comparison"] = comparison;
    }
    return j;
}

nlohmann::json analyze_json(const Formula& f) {
    const ImplicationDigraph d = build_digraph(f);
    const SccDecomposition s = scc(d);
    const bool sat = is_satisfiable(s);

    nlohmann::json j;
    j["n"] = f.n;
    j["m"] = f.clauses.size();
    j["satisfiable"] = sat;

    std::vector<std::size_t> sizes;
    sizes.reserve(static_cast<std::size_t>(s.component_count()));
    for (int c = 0; c < s.component_count(); ++c)
        sizes.push_back(s.members(c).size());
    std::sort(sizes.rbegin(), sizes.rend());
    j["component_sizes"] = sizes;

    if (!sat) {
        j["splitting_pairs"] = nlohmann::json::array();
        j["k"] = 0;
        j["clusters"] = "0";
        return j;
    }
    const std::vector<SplittingPair> pairs = splitting_pairs(s);
    nlohmann::json jpairs = nlohmann::json::array();
    for (const SplittingPair& p : pairs) {
        nlohmann::json side_a = nlohmann::json::array();
        nlohmann::json side_b = nlohmann::json::array();
        for (int v : s.members(p.comp))
            side_a.push_back(to_string(literal_of_vertex(v)));
        for (int v : s.members(p.comp_complement))
            side_b.push_back(to_string(literal_of_vertex(v)));
        jpairs.push_back({{"component", side_a}, {"complement", side_b}});
    }
    j["splitting_pairs"] = jpairs;
    j["k"] = pairs.size();
    j["clusters"] = pow2_decimal(static_cast<int>(pairs.size()));
    return j;
}

namespace {

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

std::string campaign_svg(const CampaignSummary& s) {
    const double trials = static_cast<double>(s.config.trials);
    const double lambda = s.theory.lambda_n_full;
    int last = static_cast<int>(s.y_histogram.size()) - 1;
    last = std::max(last, 4);

    const double width = 640, height = 400;
    const double left = 60, right = 20, top = 40, bottom = 50;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    const double bar_slot = plot_w / (last + 1);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
        << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"15\">"
        << "splitting pairs: empirical vs Poisson(" << fixed(lambda)
        << "), n=" << s.config.n << ", c=" << s.config.c << "</text>\n";

    // y axis: probability 0..1
    for (int tick = 0; tick <= 4; ++tick) {
        const double frac = tick / 4.0;
        const double y = top + plot_h * (1.0 - frac);
        out << "<line x1=\"" << left << "\" y1=\"" << y << "\" x2=\""
            << width - right << "\" y2=\"" << y
            << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << left - 8 << "\" y=\"" << y + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
            << "font-size=\"11\">" << fixed(frac) << "</text>\n";
    }

    for (int j = 0; j <= last; ++j) {
        const double empirical =
            static_cast<std::size_t>(j) < s.y_histogram.size()
                ? static_cast<double>(s.y_histogram[static_cast<std::size_t>(j)]) / trials
                : 0.0;
        const double x0 = left + bar_slot * j + bar_slot * 0.15;
        const double bw = bar_slot * 0.7;
        const double bh = plot_h * empirical;
        out << "<rect x=\"" << fixed(x0) << "\" y=\"" << fixed(top + plot_h - bh)
            << "\" width=\"" << fixed(bw) << "\" height=\"" << fixed(bh)
            << "\" fill=\"#4a7ebb\"/>\n";
        const double predicted = poisson_pmf(j, lambda);
        const double cx = left + bar_slot * (j + 0.5);
        const double cy = top + plot_h * (1.0 - predicted);
        out << "<circle cx=\"" << fixed(cx) << "\" cy=\"" << fixed(cy)
            << "\" r=\"4\" fill=\"none\" stroke=\"#cc3311\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << fixed(cx) << "\" y=\"" << height - bottom + 18
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
            << "font-size=\"12\">" << j << "</text>\n";
    }
    out << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"12\">Y (splitting pairs per trial)</text>\n";
    out << "<rect x=\"" << width - 190 << "\" y=\"" << top + 6
        << "\" width=\"12\" height=\"12\" fill=\"#4a7ebb\"/>\n";
    out << "<text x=\"" << width - 172 << "\" y=\"" << top + 16
        << "\" font-family=\"sans-serif\" font-size=\"11\">empirical</text>\n";
    out << "<circle cx=\"" << width - 184 << "\" cy=\"" << top + 34
        << "\" r=\"4\" fill=\"none\" stroke=\"#cc3311\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << width - 172 << "\" y=\"" << top + 38
        << "\" font-family=\"sans-serif\" font-size=\"11\">Poisson("
        << fixed(lambda) << ")</text>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace landscape
