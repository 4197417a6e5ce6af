// parse.hpp - text input: polynomial expressions and ideal description files.
//
// Ideal file layout (one directive per line, '#' starts a comment):
//   field Q            or   field GF 7
//   vars z < y < x     the first (smallest) variable is the one kept in the eliminant
//   order lex          or   order grevlex (the order among the remaining variables)
//   ideal:
//   <one polynomial expression per line>
//
// Expressions use + - * / ^ and parentheses, integer literals, and the declared variable names.
// Division is only allowed by nonzero constants.
#pragma once

#include <string>
#include <vector>

#include "elim/multipoly.hpp"

namespace elim {

struct ideal_input {
    ctx_ptr ctx;
    std::vector<multi_poly> generators;
};

multi_poly parse_poly(const ctx_ptr& ctx, const std::string& text, int line = 1);
// Parses an expression that must not involve the x~ variables.
uni_poly parse_uni(const ctx_ptr& ctx, const std::string& text, int line = 1);
ideal_input parse_ideal(const std::string& text);
// One expression per non-empty line.
std::vector<multi_poly> parse_poly_lines(const ctx_ptr& ctx, const std::string& text);

} // namespace elim
