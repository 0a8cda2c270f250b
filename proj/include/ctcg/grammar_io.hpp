#pragma once

#include <string>
#include <string_view>

#include "ctcg/grammar.hpp"
#include "ctcg/text_io.hpp"

namespace ctcg {

// Line oriented format:
//
//   nonterminals: S, S', A, B
//   terminals: a, b
//   start: S
//   rules:
//   p1: S -> A B B S a
//   S -> eps
//
// Symbols are whitespace separated, `eps` is the empty word, labels are
// optional and `#` starts a comment. Syntax and validation errors are
// reported as ParseError.
Grammar parse_grammar(std::string_view text);
Grammar load_grammar(const std::filesystem::path& path);

std::string format_grammar(const Grammar& g);

}  // namespace ctcg
