#include "landscape/digraph.hpp"

#include <algorithm>

namespace landscape {

namespace {

// CSR from an edge list via counting sort. Neighbor lists come out in
// insertion order per source, which is deterministic given the formula.
void fill_csr(int nv, const std::vector<std::pair<int, int>>& arcs,
              std::vector<std::size_t>& offsets, std::vector<int>& edges) {
    offsets.assign(static_cast<std::size_t>(nv) + 1, 0);
    for (const auto& [u, v] : arcs)
        ++offsets[static_cast<std::size_t>(u) + 1];
    for (int v = 0; v < nv; ++v)
        offsets[static_cast<std::size_t>(v) + 1] += offsets[v];
    edges.resize(arcs.size());
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto& [u, v] : arcs)
        edges[cursor[static_cast<std::size_t>(u)]++] = v;
}

} // namespace

ImplicationDigraph build_digraph(const Formula& f) {
    ImplicationDigraph d;
    d.n_ = f.n;
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(2 * f.clauses.size());
    for (const Incompatibility& c : f.clauses) {
        const int x = vertex_of(c.first);
        const int y = vertex_of(c.second);
        arcs.emplace_back(x, y ^ 1);
        arcs.emplace_back(y, x ^ 1);
    }
    fill_csr(d.vertex_count(), arcs, d.offsets_, d.edges_);
    std::vector<std::pair<int, int>> rarcs;
    rarcs.reserve(arcs.size());
    for (const auto& [u, v] : arcs)
        rarcs.emplace_back(v, u);
    fill_csr(d.vertex_count(), rarcs, d.roffsets_, d.redges_);
    return d;
}

std::vector<Literal> reach_set(const ImplicationDigraph& d, Literal x,
                               Direction dir) {
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(d.vertex_count()), 0);
    std::vector<int> stack{vertex_of(x)};
    seen[static_cast<std::size_t>(vertex_of(x))] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        const auto next = dir == Direction::forward ? d.out(v) : d.in(v);
        for (int w : next) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    std::vector<Literal> result;
    for (int v = 0; v < d.vertex_count(); ++v)
        if (seen[static_cast<std::size_t>(v)])
            result.push_back(literal_of_vertex(v));
    return result;
}

} // namespace landscape
