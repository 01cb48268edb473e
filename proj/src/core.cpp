#include "landscape/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace landscape {

std::string to_string(Literal x) {
    return std::to_string(x.sign) + "_" + std::to_string(x.locus + 1);
}

Genotype Genotype::from_string(std::string_view s) {
    Genotype g(static_cast<int>(s.size()));
    for (int i = 0; i < g.n_; ++i) {
        const char ch = s[static_cast<std::size_t>(i)];
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("genotype string must be binary: '" +
                                        std::string(s) + "'");
        g.set_allele(i, ch == '1');
    }
    return g;
}

Genotype Genotype::from_code(std::uint64_t code, int n) {
    if (n < 0 || n > 63)
        throw std::invalid_argument("genotype code form requires 0 <= n <= 63");
    Genotype g(n);
    if (n > 0)
        g.words_[0] = code & (n == 63 ? ~std::uint64_t{0} >> 1
                                      : (std::uint64_t{1} << n) - 1);
    return g;
}

std::uint64_t Genotype::code() const {
    if (n_ > 63)
        throw std::invalid_argument("genotype too wide for code form");
    return words_.empty() ? 0 : words_[0];
}

std::string Genotype::str() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i)
        if (allele(i))
            s[static_cast<std::size_t>(i)] = '1';
    return s;
}

std::vector<int> differing_loci(const Genotype& u, const Genotype& v) {
    if (u.locus_count() != v.locus_count())
        throw std::invalid_argument("genotype dimension mismatch");
    std::vector<int> out;
    for (int i = 0; i < u.locus_count(); ++i)
        if (u.allele(i) != v.allele(i))
            out.push_back(i);
    return out;
}

Incompatibility make_incompatibility(Literal a, Literal b) {
    if (a.locus == b.locus)
        throw std::invalid_argument("same-locus incompatibility unsupported");
    if (b.locus < a.locus)
        std::swap(a, b);
    return {a, b};
}

Formula build_formula(int n, const std::vector<std::pair<Literal, Literal>>& pairs) {
    if (n < 1)
        throw std::invalid_argument("formula requires n >= 1");
    Formula f;
    f.n = n;
    f.clauses.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        for (const Literal& x : {a, b}) {
            if (x.locus < 0 || x.locus >= n)
                throw std::invalid_argument("literal locus out of range: " +
                                            to_string(x));
            if (x.sign != 0 && x.sign != 1)
                throw std::invalid_argument("literal sign must be 0 or 1");
        }
        f.clauses.push_back(make_incompatibility(a, b));
    }
    std::sort(f.clauses.begin(), f.clauses.end());
    f.clauses.erase(std::unique(f.clauses.begin(), f.clauses.end()),
                    f.clauses.end());
    return f;
}

bool is_viable(const Genotype& g, const Formula& f) {
    return !find_violation(g, f).violated;
}

ViolationResult find_violation(const Genotype& g, const Formula& f) {
    if (g.locus_count() != f.n)
        throw std::invalid_argument("genotype/formula dimension mismatch");
    for (const Incompatibility& c : f.clauses)
        if (g.has(c.first) && g.has(c.second))
            return {true, c};
    return {};
}

} // namespace landscape
