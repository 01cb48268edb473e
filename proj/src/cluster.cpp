#include "landscape/cluster.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace landscape {

std::string pow2_decimal(int k) {
    if (k < 0)
        throw std::invalid_argument("pow2_decimal: negative exponent");
    // base-1e9 limbs, little-endian
    std::vector<std::uint32_t> limbs{1};
    for (int i = 0; i < k; ++i) {
        std::uint32_t carry = 0;
        for (std::uint32_t& limb : limbs) {
            const std::uint64_t doubled = 2ull * limb + carry;
            limb = static_cast<std::uint32_t>(doubled % 1000000000u);
            carry = static_cast<std::uint32_t>(doubled / 1000000000u);
        }
        if (carry)
            limbs.push_back(carry);
    }
    std::string out = std::to_string(limbs.back());
    for (auto it = limbs.rbegin() + 1; it != limbs.rend(); ++it) {
        std::string part = std::to_string(*it);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

std::vector<SplittingPair> splitting_pairs(const SccDecomposition& s) {
    if (!is_satisfiable(s))
        throw std::invalid_argument(
            "splitting_pairs: decomposition has a contradictory cycle");
    std::vector<SplittingPair> pairs;
    for (int c = 0; c < s.component_count(); ++c) {
        if (!s.nontrivial(c))
            continue;
        const int cc = s.complement_of(c);
        // complementary components cover the same loci, so both are
        // nontrivial; report the pair from its smaller-vertex side
        if (s.min_vertex(c) > s.min_vertex(cc))
            continue;
        if (comparable(s, c, cc))
            continue;
        SplittingPair p;
        p.comp = c;
        p.comp_complement = cc;
        for (int v : s.members(c))
            p.loci.push_back(v >> 1);
        std::sort(p.loci.begin(), p.loci.end());
        pairs.push_back(std::move(p));
    }
    std::sort(pairs.begin(), pairs.end(),
              [&](const SplittingPair& a, const SplittingPair& b) {
                  return s.min_vertex(a.comp) < s.min_vertex(b.comp);
              });
    return pairs;
}

ClusterReport cluster_report(const Formula& f) {
    const ImplicationDigraph d = build_digraph(f);
    const SccDecomposition s = scc(d);
    ClusterReport r;
    r.satisfiable = is_satisfiable(s);
    if (!r.satisfiable) {
        r.cluster_count = "0";
        return r;
    }
    r.pairs = splitting_pairs(s);
    r.k = static_cast<int>(r.pairs.size());
    r.cluster_count = pow2_decimal(r.k);
    return r;
}

namespace {

void require_viable(const Genotype& g, const Formula& f, const char* name) {
    const ViolationResult v = find_violation(g, f);
    if (v.violated)
        throw std::invalid_argument(
            std::string(name) + " genotype " + g.str() +
            " is inviable: violates incompatibility " +
            to_string(v.clause.first) + " " + to_string(v.clause.second));
}

// Differing loci as a membership mask.
std::vector<std::uint8_t> difference_mask(const Genotype& u, const Genotype& v) {
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(u.locus_count()), 0);
    for (int locus : differing_loci(u, v))
        mask[static_cast<std::size_t>(locus)] = 1;
    return mask;
}

bool pair_within(const SplittingPair& p, const std::vector<std::uint8_t>& mask) {
    return std::all_of(p.loci.begin(), p.loci.end(),
                       [&](int locus) { return mask[static_cast<std::size_t>(locus)]; });
}

} // namespace

bool same_cluster(const Genotype& u, const Genotype& v, const Formula& f) {
    require_viable(u, f, "first");
    require_viable(v, f, "second");
    const auto mask = difference_mask(u, v);
    const SccDecomposition s = scc(build_digraph(f));
    for (const SplittingPair& p : splitting_pairs(s))
        if (pair_within(p, mask))
            return false;
    return true;
}

std::optional<std::vector<Genotype>> find_path(const Genotype& u,
                                               const Genotype& v,
                                               const Formula& f) {
    require_viable(u, f, "first");
    require_viable(v, f, "second");
    const ImplicationDigraph d = build_digraph(f);
    const SccDecomposition s = scc(d);
    {
        const auto mask = difference_mask(u, v);
        for (const SplittingPair& p : splitting_pairs(s))
            if (pair_within(p, mask))
                return std::nullopt;
    }

    std::vector<Genotype> path{u};
    Genotype w = u;
    for (int target_locus = 0; target_locus < f.n; ++target_locus) {
        if (w.allele(target_locus) == v.allele(target_locus))
            continue;
        const Literal x{target_locus, v.allele(target_locus)};

        // Alleles of v that the target allele forces and that w still
        // lacks. Everything else reachable from x is already in place.
        std::vector<int> pending; // vertex set, ascending
        for (const Literal& y : reach_set(d, x, Direction::forward))
            if (!w.has(y))
                pending.push_back(vertex_of(y));

        std::vector<int> slot(static_cast<std::size_t>(d.vertex_count()), -1);
        for (std::size_t i = 0; i < pending.size(); ++i)
            slot[static_cast<std::size_t>(pending[i])] = static_cast<int>(i);

        // Flip sinks of the induced subgraph first: a mutation toward an
        // allele is viable once every allele it forces is present.
        std::vector<int> out_degree(pending.size(), 0);
        std::vector<std::vector<int>> in_within(pending.size());
        for (std::size_t i = 0; i < pending.size(); ++i) {
            for (int to : d.out(pending[i])) {
                const int j = slot[static_cast<std::size_t>(to)];
                if (j >= 0) {
                    ++out_degree[i];
                    in_within[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
                }
            }
        }
        std::priority_queue<int, std::vector<int>, std::greater<>> ready;
        for (std::size_t i = 0; i < pending.size(); ++i)
            if (out_degree[i] == 0)
                ready.push(pending[i]);
        std::size_t flipped = 0;
        while (!ready.empty()) {
            const int vertex = ready.top();
            ready.pop();
            const Literal leaf = literal_of_vertex(vertex);
            w.set_allele(leaf.locus, leaf.sign);
            path.push_back(w);
            ++flipped;
            for (int from : in_within[static_cast<std::size_t>(slot[static_cast<std::size_t>(vertex)])])
                if (--out_degree[static_cast<std::size_t>(from)] == 0)
                    ready.push(pending[static_cast<std::size_t>(from)]);
        }
        if (flipped != pending.size())
            throw std::logic_error("find_path: forced alleles form a cycle");
    }
    return path;
}

} // namespace landscape
