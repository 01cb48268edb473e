#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "landscape/core.hpp"

namespace landscape {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Native incompatibility-list format. First line "loci <n>", then one
/// incompatibility per line as two "<0|1>_<locus>" tokens, loci 1-based.
/// Blank lines and lines starting with '#' are skipped.
Formula parse_native(std::string_view text);
std::string render_native(const Formula& f);

/// DIMACS CNF with strictly two literals per clause. The clause
/// (l1 v l2) maps to the incompatibility (not l1, not l2). Clauses on a
/// single variable are rejected.
Formula parse_dimacs(std::string_view text);
std::string render_dimacs(const Formula& f);

/// Reads a file and dispatches on its first meaningful token
/// ("p"/"c" -> DIMACS, "loci" -> native).
Formula load_formula(const std::string& path);

/// Binary string, leftmost character = locus 1; must match n.
Genotype parse_genotype(std::string_view s, int n);

} // namespace landscape
