#pragma once

#include <span>
#include <vector>

#include "landscape/core.hpp"

namespace landscape {

/// Implication digraph D_F: one vertex per literal (2n total), and for
/// every incompatibility (x,y) the two edges x -> not-y and y -> not-x.
/// Stored in CSR form, forward and reverse.
class ImplicationDigraph {
  public:
    ImplicationDigraph() = default;

    int locus_count() const { return n_; }
    int vertex_count() const { return 2 * n_; }
    std::size_t edge_count() const { return edges_.size(); }

    std::span<const int> out(int v) const {
        return {edges_.data() + offsets_[v],
                edges_.data() + offsets_[v + 1]};
    }
    std::span<const int> in(int v) const {
        return {redges_.data() + roffsets_[v],
                redges_.data() + roffsets_[v + 1]};
    }

    friend ImplicationDigraph build_digraph(const Formula& f);

  private:
    int n_ = 0;
    std::vector<std::size_t> offsets_, roffsets_;
    std::vector<int> edges_, redges_;
};

ImplicationDigraph build_digraph(const Formula& f);

enum class Direction { forward, backward };

/// L+(x) (forward) or L-(x) (backward), always including x itself.
/// Sorted by vertex index.
std::vector<Literal> reach_set(const ImplicationDigraph& d, Literal x,
                               Direction dir);

} // namespace landscape
