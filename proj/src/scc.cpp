#include "landscape/scc.hpp"

#include <algorithm>

namespace landscape {

namespace {

// Above this component count the closure matrix is skipped and reaches()
// falls back to on-demand DFS over the condensation.
constexpr int kClosureMaxComponents = 4096;

struct Frame {
    int vertex;
    std::size_t next_edge;
};

} // namespace

SccDecomposition scc(const ImplicationDigraph& d) {
    const int nv = d.vertex_count();
    SccDecomposition s;
    s.n_ = d.locus_count();
    s.component_id_.assign(static_cast<std::size_t>(nv), -1);

    // Tarjan, iterative. Components are numbered in reverse topological
    // order as they complete; flipped afterwards.
    std::vector<int> index(static_cast<std::size_t>(nv), 0);
    std::vector<int> lowlink(static_cast<std::size_t>(nv), 0);
    std::vector<std::uint8_t> on_stack(static_cast<std::size_t>(nv), 0);
    std::vector<int> scc_stack;
    std::vector<Frame> frames;
    int next_index = 1;
    int ncomp = 0;

    for (int root = 0; root < nv; ++root) {
        if (index[static_cast<std::size_t>(root)])
            continue;
        frames.push_back({root, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            const int v = f.vertex;
            if (index[static_cast<std::size_t>(v)] == 0) {
                index[static_cast<std::size_t>(v)] = lowlink[static_cast<std::size_t>(v)] = next_index++;
                scc_stack.push_back(v);
                on_stack[static_cast<std::size_t>(v)] = 1;
            }
            const auto edges = d.out(v);
            if (f.next_edge < edges.size()) {
                const int w = edges[f.next_edge++];
                if (index[static_cast<std::size_t>(w)] == 0)
                    frames.push_back({w, 0});
                else if (on_stack[static_cast<std::size_t>(w)])
                    lowlink[static_cast<std::size_t>(v)] =
                        std::min(lowlink[static_cast<std::size_t>(v)],
                                 index[static_cast<std::size_t>(w)]);
                continue;
            }
            if (lowlink[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
                int w;
                do {
                    w = scc_stack.back();
                    scc_stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = 0;
                    s.component_id_[static_cast<std::size_t>(w)] = ncomp;
                } while (w != v);
                ++ncomp;
            }
            frames.pop_back();
            if (!frames.empty()) {
                const int parent = frames.back().vertex;
                lowlink[static_cast<std::size_t>(parent)] =
                    std::min(lowlink[static_cast<std::size_t>(parent)],
                             lowlink[static_cast<std::size_t>(v)]);
            }
        }
    }

    s.component_count_ = ncomp;
    for (int v = 0; v < nv; ++v)
        s.component_id_[static_cast<std::size_t>(v)] =
            ncomp - 1 - s.component_id_[static_cast<std::size_t>(v)];

    s.components_.resize(static_cast<std::size_t>(ncomp));
    for (int v = 0; v < nv; ++v)
        s.components_[static_cast<std::size_t>(s.component_id_[static_cast<std::size_t>(v)])]
            .push_back(v);

    s.complement_.resize(static_cast<std::size_t>(ncomp));
    for (int c = 0; c < ncomp; ++c)
        s.complement_[static_cast<std::size_t>(c)] =
            s.component_id_[static_cast<std::size_t>(s.components_[static_cast<std::size_t>(c)].front() ^ 1)];

    // Condensation edges, deduplicated.
    std::vector<std::pair<int, int>> arcs;
    for (int v = 0; v < nv; ++v) {
        const int cu = s.component_id_[static_cast<std::size_t>(v)];
        for (int w : d.out(v)) {
            const int cv = s.component_id_[static_cast<std::size_t>(w)];
            if (cu != cv)
                arcs.emplace_back(cu, cv);
        }
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    s.cond_offsets_.assign(static_cast<std::size_t>(ncomp) + 1, 0);
    s.cond_edges_.reserve(arcs.size());
    for (const auto& [a, b] : arcs) {
        ++s.cond_offsets_[static_cast<std::size_t>(a) + 1];
        s.cond_edges_.push_back(b);
    }
    for (int c = 0; c < ncomp; ++c)
        s.cond_offsets_[static_cast<std::size_t>(c) + 1] += s.cond_offsets_[static_cast<std::size_t>(c)];

    if (ncomp <= kClosureMaxComponents) {
        s.closure_words_ = (static_cast<std::size_t>(ncomp) + 63) / 64;
        s.closure_.assign(static_cast<std::size_t>(ncomp) * s.closure_words_, 0);
        for (int c = ncomp - 1; c >= 0; --c) {
            std::uint64_t* row = s.closure_.data() + static_cast<std::size_t>(c) * s.closure_words_;
            row[static_cast<std::size_t>(c) >> 6] |= std::uint64_t{1} << (c & 63);
            for (int b : s.condensation_out(c)) {
                const std::uint64_t* other =
                    s.closure_.data() + static_cast<std::size_t>(b) * s.closure_words_;
                for (std::size_t w = 0; w < s.closure_words_; ++w)
                    row[w] |= other[w];
            }
        }
    }

    return s;
}

bool SccDecomposition::reaches(int a, int b) const {
    if (a == b)
        return true;
    if (a > b)
        return false; // edges only go up in topological order
    if (!closure_.empty()) {
        const std::uint64_t* row = closure_.data() + static_cast<std::size_t>(a) * closure_words_;
        return (row[static_cast<std::size_t>(b) >> 6] >> (b & 63)) & 1u;
    }
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(component_count_), 0);
    std::vector<int> stack{a};
    seen[static_cast<std::size_t>(a)] = 1;
    while (!stack.empty()) {
        const int c = stack.back();
        stack.pop_back();
        for (int w : condensation_out(c)) {
            if (w == b)
                return true;
            if (w < b && !seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return false;
}

bool is_satisfiable(const SccDecomposition& s) {
    for (int i = 0; i < s.locus_count(); ++i)
        if (s.component_of(2 * i) == s.component_of(2 * i + 1))
            return false;
    return true;
}

bool comparable(const SccDecomposition& s, int a, int b) {
    return s.reaches(a, b) || s.reaches(b, a);
}

} // namespace landscape
