#pragma once

#include <string>

#include <json.hpp>

#include "landscape/ensemble.hpp"

namespace landscape {

/// Fixed-header CSV, one trial per row:
/// trial,satisfiable,m_clauses,Y,T,X2,...,Xm,comparable_pairs,log2_clusters
std::string campaign_csv(const CampaignResult& result);

/// Summary with empirical histograms, theory values and Poisson
/// deviations (deviations only when 0 < c < 1).
nlohmann::json campaign_summary_json(const CampaignResult& result);

/// Analysis report for a fixed instance.
nlohmann::json analyze_json(const Formula& f);

/// Self-contained SVG: bars for the empirical Y distribution, marker
/// overlay for Poisson(lambda_n).
std::string campaign_svg(const CampaignSummary& summary);

} // namespace landscape
