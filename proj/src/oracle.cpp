#include "landscape/oracle.hpp"

#include <numeric>
#include <stdexcept>

namespace landscape::oracle {

namespace {

std::int32_t find_root(std::vector<std::int32_t>& parent, std::int32_t x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
    }
    return x;
}

} // namespace

ViableSubgraph enumerate(const Formula& f, int cap) {
    if (f.n > cap)
        throw std::invalid_argument("oracle enumeration capped at n = " +
                                    std::to_string(cap));
    const std::size_t size = std::size_t{1} << f.n;
    ViableSubgraph v;
    v.n = f.n;
    v.viable.assign(size, 1);

    // mask/value per clause: a code is killed when both alleles match
    std::vector<std::pair<std::uint64_t, std::uint64_t>> tests;
    tests.reserve(f.clauses.size());
    for (const Incompatibility& c : f.clauses) {
        const std::uint64_t mask = (std::uint64_t{1} << c.first.locus) |
                                   (std::uint64_t{1} << c.second.locus);
        const std::uint64_t value =
            (static_cast<std::uint64_t>(c.first.sign) << c.first.locus) |
            (static_cast<std::uint64_t>(c.second.sign) << c.second.locus);
        tests.emplace_back(mask, value);
    }
    for (std::size_t code = 0; code < size; ++code) {
        for (const auto& [mask, value] : tests) {
            if ((code & mask) == value) {
                v.viable[code] = 0;
                break;
            }
        }
        v.viable_count += v.viable[code];
    }

    std::vector<std::int32_t> parent(size);
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t code = 0; code < size; ++code) {
        if (!v.viable[code])
            continue;
        for (int i = 0; i < f.n; ++i) {
            const std::size_t neighbor = code ^ (std::size_t{1} << i);
            if (neighbor > code && v.viable[neighbor]) {
                const std::int32_t ra = find_root(parent, static_cast<std::int32_t>(code));
                const std::int32_t rb = find_root(parent, static_cast<std::int32_t>(neighbor));
                if (ra != rb)
                    parent[static_cast<std::size_t>(rb)] = ra;
            }
        }
    }

    v.component_id.assign(size, -1);
    for (std::size_t code = 0; code < size; ++code) {
        if (!v.viable[code])
            continue;
        const std::int32_t root = find_root(parent, static_cast<std::int32_t>(code));
        if (v.component_id[static_cast<std::size_t>(root)] < 0)
            v.component_id[static_cast<std::size_t>(root)] = v.component_count++;
        v.component_id[code] = v.component_id[static_cast<std::size_t>(root)];
    }
    return v;
}

bool connected(const ViableSubgraph& v, const Genotype& a, const Genotype& b) {
    if (a.locus_count() != v.n || b.locus_count() != v.n)
        throw std::invalid_argument("genotype dimension mismatch");
    const std::int32_t ca = v.component_id[a.code()];
    const std::int32_t cb = v.component_id[b.code()];
    if (ca < 0 || cb < 0)
        throw std::invalid_argument("oracle connectivity queried on an inviable genotype");
    return ca == cb;
}

std::vector<std::uint64_t> viable_codes(const ViableSubgraph& v) {
    std::vector<std::uint64_t> codes;
    codes.reserve(v.viable_count);
    for (std::size_t code = 0; code < v.viable.size(); ++code)
        if (v.viable[code])
            codes.push_back(code);
    return codes;
}

} // namespace landscape::oracle
