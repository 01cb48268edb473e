#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace landscape {

/// One allele: a locus index plus a sign bit. Sign 0 is the negative
/// allele 0_i, sign 1 the positive allele 1_i. Loci are 0-based
/// internally; all text I/O is 1-based.
struct Literal {
    int locus = 0;
    int sign = 0;

    friend bool operator==(const Literal&, const Literal&) = default;
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

constexpr Literal negate(Literal x) { return {x.locus, x.sign ^ 1}; }

/// Vertex index of a literal in the implication digraph. The complement
/// is always index XOR 1.
constexpr int vertex_of(Literal x) { return 2 * x.locus + x.sign; }
constexpr Literal literal_of_vertex(int v) { return {v >> 1, v & 1}; }

/// 1-based text form, e.g. "0_2" for the negative allele of locus 2.
std::string to_string(Literal x);

/// One allele per locus, packed. Equivalent to a truth assignment over
/// the loci; doubles as a vertex of the n-cube.
class Genotype {
  public:
    Genotype() = default;
    explicit Genotype(int n) : n_(n), words_((n + 63) / 64, 0) {}

    /// Binary string, leftmost character = locus 1.
    static Genotype from_string(std::string_view s);
    /// Integer code with bit i = allele at locus i. Requires n <= 63.
    static Genotype from_code(std::uint64_t code, int n);

    int locus_count() const { return n_; }

    int allele(int locus) const {
        return static_cast<int>((words_[locus >> 6] >> (locus & 63)) & 1u);
    }
    void set_allele(int locus, int sign) {
        const std::uint64_t bit = std::uint64_t{1} << (locus & 63);
        if (sign)
            words_[locus >> 6] |= bit;
        else
            words_[locus >> 6] &= ~bit;
    }
    bool has(Literal x) const { return allele(x.locus) == x.sign; }

    std::uint64_t code() const;
    std::string str() const;

    friend bool operator==(const Genotype&, const Genotype&) = default;

  private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

std::vector<int> differing_loci(const Genotype& u, const Genotype& v);

/// Unordered pair of alleles on strictly distinct loci whose
/// co-occurrence is lethal. Canonical order: lower locus first.
struct Incompatibility {
    Literal first;
    Literal second;

    friend bool operator==(const Incompatibility&, const Incompatibility&) = default;
    friend auto operator<=>(const Incompatibility&, const Incompatibility&) = default;
};

Incompatibility make_incompatibility(Literal a, Literal b);

/// A duplicate-free canonical set of incompatibilities over n loci.
struct Formula {
    int n = 0;
    std::vector<Incompatibility> clauses;
};

/// Validates loci, canonicalizes pair order, sorts and deduplicates.
Formula build_formula(int n, const std::vector<std::pair<Literal, Literal>>& pairs);

/// True iff no incompatibility has both of its alleles in g.
bool is_viable(const Genotype& g, const Formula& f);

/// First violated incompatibility in canonical order, if any.
struct ViolationResult {
    bool violated = false;
    Incompatibility clause;
};
ViolationResult find_violation(const Genotype& g, const Formula& f);

} // namespace landscape
