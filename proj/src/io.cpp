#include "landscape/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace landscape {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        if (j > i)
            tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

long parse_long(std::string_view token, const char* what) {
    long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(std::string("invalid ") + what + ": '" + std::string(token) + "'");
    return value;
}

Literal parse_allele_token(std::string_view token, int n) {
    const std::size_t underscore = token.find('_');
    if (underscore == std::string_view::npos)
        throw ParseError("expected <0|1>_<locus>, got '" + std::string(token) + "'");
    const std::string_view sign_part = token.substr(0, underscore);
    if (sign_part != "0" && sign_part != "1")
        throw ParseError("allele sign must be 0 or 1 in '" + std::string(token) + "'");
    const long locus = parse_long(token.substr(underscore + 1), "locus");
    if (locus < 1 || locus > n)
        throw ParseError("locus out of range in '" + std::string(token) + "'");
    return Literal{static_cast<int>(locus - 1), sign_part == "1" ? 1 : 0};
}

} // namespace

Formula parse_native(std::string_view text) {
    std::vector<std::pair<Literal, Literal>> pairs;
    int n = -1;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0].front() == '#')
            continue;
        if (n < 0) {
            if (tokens.size() != 2 || tokens[0] != "loci")
                throw ParseError("native format must start with 'loci <n>'");
            const long value = parse_long(tokens[1], "locus count");
            if (value < 1)
                throw ParseError("locus count must be positive");
            n = static_cast<int>(value);
            continue;
        }
        if (tokens.size() != 2)
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected two allele tokens");
        try {
            pairs.emplace_back(parse_allele_token(tokens[0], n),
                               parse_allele_token(tokens[1], n));
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("line ") + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (n < 0)
        throw ParseError("native format must start with 'loci <n>'");
    try {
        return build_formula(n, pairs);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string render_native(const Formula& f) {
    std::ostringstream out;
    out << "loci " << f.n << "\n";
    for (const Incompatibility& c : f.clauses)
        out << c.first.sign << "_" << c.first.locus + 1 << " " << c.second.sign
            << "_" << c.second.locus + 1 << "\n";
    return out.str();
}

Formula parse_dimacs(std::string_view text) {
    std::vector<long> numbers;
    int n = -1;
    long declared_clauses = -1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0] == "c")
            continue;
        if (tokens[0] == "p") {
            if (n >= 0)
                throw ParseError("duplicate DIMACS header");
            if (tokens.size() != 4 || tokens[1] != "cnf")
                throw ParseError("malformed DIMACS header");
            const long vars = parse_long(tokens[2], "variable count");
            declared_clauses = parse_long(tokens[3], "clause count");
            if (vars < 1 || declared_clauses < 0)
                throw ParseError("malformed DIMACS header");
            n = static_cast<int>(vars);
            continue;
        }
        if (n < 0)
            throw ParseError("clause before DIMACS header");
        for (std::string_view t : tokens)
            numbers.push_back(parse_long(t, "literal"));
    }
    if (n < 0)
        throw ParseError("missing DIMACS header");

    std::vector<std::pair<Literal, Literal>> pairs;
    std::vector<long> clause;
    for (long v : numbers) {
        if (v == 0) {
            if (clause.size() != 2)
                throw ParseError("every clause must have exactly 2 literals, got " +
                                 std::to_string(clause.size()));
            Literal lits[2];
            for (int i = 0; i < 2; ++i) {
                const long var = clause[i] > 0 ? clause[i] : -clause[i];
                if (var < 1 || var > n)
                    throw ParseError("literal out of range: " + std::to_string(clause[i]));
                // negate the clause literal to get the lethal allele
                lits[i] = Literal{static_cast<int>(var - 1), clause[i] > 0 ? 0 : 1};
            }
            if (lits[0].locus == lits[1].locus)
                throw ParseError("clause on a single variable is unsupported "
                                 "(same-locus incompatibility)");
            pairs.emplace_back(lits[0], lits[1]);
            clause.clear();
        } else {
            clause.push_back(v);
        }
    }
    if (!clause.empty())
        throw ParseError("unterminated clause");
    try {
        return build_formula(n, pairs);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string render_dimacs(const Formula& f) {
    std::ostringstream out;
    out << "p cnf " << f.n << " " << f.clauses.size() << "\n";
    for (const Incompatibility& c : f.clauses) {
        const Literal a = negate(c.first);
        const Literal b = negate(c.second);
        out << (a.sign ? 1 : -1) * (a.locus + 1) << " "
            << (b.sign ? 1 : -1) * (b.locus + 1) << " 0\n";
    }
    return out.str();
}

Formula load_formula(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    if (i < text.size() && (text[i] == 'p' || text[i] == 'c'))
        return parse_dimacs(text);
    return parse_native(text);
}

Genotype parse_genotype(std::string_view s, int n) {
    if (static_cast<int>(s.size()) != n)
        throw ParseError("genotype length " + std::to_string(s.size()) +
                         " does not match locus count " + std::to_string(n));
    try {
        return Genotype::from_string(s);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

} // namespace landscape
