#pragma once

#include <cstdint>
#include <vector>

#include "landscape/core.hpp"

namespace landscape::oracle {

inline constexpr int kDefaultLocusCap = 20;

/// Ground truth by exhaustion: the subgraph of the n-cube induced by the
/// viable genotypes, with connected components under single-locus flips.
struct ViableSubgraph {
    int n = 0;
    std::vector<std::uint8_t> viable;     // indexed by genotype code
    std::vector<std::int32_t> component_id; // -1 for inviable codes
    int component_count = 0;
    std::uint64_t viable_count = 0;
};

/// Enumerates all 2^n genotypes and unions Hamming-1 viable neighbors.
ViableSubgraph enumerate(const Formula& f, int cap = kDefaultLocusCap);

/// Component-id equality for two viable genotypes.
bool connected(const ViableSubgraph& v, const Genotype& a, const Genotype& b);

/// Codes of all viable genotypes, ascending.
std::vector<std::uint64_t> viable_codes(const ViableSubgraph& v);

} // namespace landscape::oracle
