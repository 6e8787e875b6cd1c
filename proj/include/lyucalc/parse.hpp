// Input parsing: polynomial expressions and the key=value problem format
//
//   # comment
//   p=5
//   vars=x,y,z
//   gens=y^2*z - x^3 - z^3
//   label=elliptic (optional)
//
// Generators are comma-separated polynomial expressions; the grammar is
// sums/differences of '*'-separated factors, each an integer, a variable, or
// a parenthesized subexpression, optionally raised with '^'. Errors carry a
// 1-based line and column.

#ifndef LYUCALC_PARSE_HPP
#define LYUCALC_PARSE_HPP

#include <string>
#include <vector>

#include "lyucalc/ring.hpp"

namespace lyu {

Poly parse_poly(const Ring& ring, const std::string& text, int line = 1, int col = 1);

struct Problem {
    u64 p = 0;
    std::vector<std::string> vars;
    std::vector<std::string> gen_text; // original generator expressions
    std::vector<std::pair<int, int>> gen_pos; // (line, column) of each expression
    std::string label;
};

Problem parse_problem(const std::string& text);

Ring problem_ring(const Problem& pb);
std::vector<Poly> problem_gens(const Problem& pb, const Ring& ring);

// split a generator list at top-level commas (parenthesis aware)
std::vector<std::string> split_top_level(const std::string& s);

} // namespace lyu

#endif
