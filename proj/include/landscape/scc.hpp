#pragma once

#include <cstdint>
#include <vector>

#include "landscape/digraph.hpp"

namespace landscape {

/// Strong components of D_F with their condensation. Component indices
/// are a topological order of the condensation: every condensation edge
/// goes from a lower index to a higher one. Immutable once built.
class SccDecomposition {
  public:
    int locus_count() const { return n_; }
    int component_count() const { return component_count_; }

    int component_of(int vertex) const {
        return component_id_[static_cast<std::size_t>(vertex)];
    }
    int component_of(Literal x) const { return component_of(vertex_of(x)); }

    /// Members of a component, sorted by vertex index.
    const std::vector<int>& members(int comp) const {
        return components_[static_cast<std::size_t>(comp)];
    }
    int complement_of(int comp) const {
        return complement_[static_cast<std::size_t>(comp)];
    }
    int min_vertex(int comp) const { return members(comp).front(); }
    bool nontrivial(int comp) const { return members(comp).size() >= 2; }

    std::span<const int> condensation_out(int comp) const {
        return {cond_edges_.data() + cond_offsets_[static_cast<std::size_t>(comp)],
                cond_edges_.data() + cond_offsets_[static_cast<std::size_t>(comp) + 1]};
    }

    /// True iff comp a reaches comp b in the condensation (reflexive).
    bool reaches(int a, int b) const;

    friend SccDecomposition scc(const ImplicationDigraph& d);

  private:
    int n_ = 0;
    int component_count_ = 0;
    std::vector<int> component_id_;
    std::vector<std::vector<int>> components_;
    std::vector<int> complement_;
    std::vector<std::size_t> cond_offsets_;
    std::vector<int> cond_edges_;
    // Transitive closure rows, built only while the component count stays
    // small enough; larger instances answer reaches() by pruned DFS.
    std::size_t closure_words_ = 0;
    std::vector<std::uint64_t> closure_;
};

/// Iterative Tarjan decomposition; no recursion, so instances with n in
/// the 1e5..1e6 range are safe.
SccDecomposition scc(const ImplicationDigraph& d);

/// No contradictory cycle: no locus has both of its alleles in one
/// component.
bool is_satisfiable(const SccDecomposition& s);

/// True iff the components are related (either way) in the condensation
/// partial order.
bool comparable(const SccDecomposition& s, int a, int b);

} // namespace landscape
