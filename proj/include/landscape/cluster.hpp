#pragma once

#include <optional>
#include <string>
#include <vector>

#include "landscape/scc.hpp"

namespace landscape {

/// A complementary pair of nontrivial strong components with no order
/// relation between them. Each such pair splits the viable genotypes
/// into two families of clusters, one per strategy.
struct SplittingPair {
    int comp = -1;            // canonical side: holds the smallest vertex of the union
    int comp_complement = -1;
    std::vector<int> loci;    // sorted loci covered by the pair

    friend bool operator==(const SplittingPair&, const SplittingPair&) = default;
};

struct ClusterReport {
    bool satisfiable = false;
    std::vector<SplittingPair> pairs;
    int k = 0;                 // number of splitting pairs
    std::string cluster_count; // decimal 2^k, "0" when unsatisfiable
};

/// Decimal string of 2^k.
std::string pow2_decimal(int k);

/// All splitting pairs, ordered by smallest member vertex. The
/// decomposition must be satisfiable.
std::vector<SplittingPair> splitting_pairs(const SccDecomposition& s);

/// Full pipeline: digraph, strong components, satisfiability, splitting
/// pairs, cluster count.
ClusterReport cluster_report(const Formula& f);

/// Connectivity of two viable genotypes under single-locus mutations:
/// they are in one cluster iff the loci where they differ contain no
/// splitting pair.
bool same_cluster(const Genotype& u, const Genotype& v, const Formula& f);

/// A viable single-locus mutational path from u to v, or nullopt when
/// they sit in different clusters. Consecutive entries differ in exactly
/// one locus and every entry is viable. Ties are broken deterministically
/// (differing loci by increasing index, flippable alleles by increasing
/// vertex index).
std::optional<std::vector<Genotype>> find_path(const Genotype& u,
                                               const Genotype& v,
                                               const Formula& f);

} // namespace landscape
