#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ctcg {

// Interned symbol. Equal names give equal symbols; ordering follows
// interning order, use name_less when a stable textual order is needed.
//
// Terminal/nonterminal is a property of the grammar using the symbol:
// the core grammar's nonterminals are the control grammar's terminals.
class Symbol {
 public:
  Symbol() = default;

  static Symbol named(std::string_view name);

  const std::string& name() const;
  std::uint32_t id() const noexcept { return id_; }
  bool valid() const noexcept { return id_ != 0; }

  friend bool operator==(Symbol, Symbol) = default;
  friend auto operator<=>(Symbol, Symbol) = default;

 private:
  explicit Symbol(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = 0;
};

using Word = std::vector<Symbol>;
using SymbolSet = std::set<Symbol>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

bool name_less(Symbol a, Symbol b);

// Shorter words first, equal lengths compared symbol by symbol on names.
bool length_lex_less(const Word& a, const Word& b);

struct LengthLexLess {
  bool operator()(const Word& a, const Word& b) const { return length_lex_less(a, b); }
};

// Whitespace separated symbol names; "eps" alone is the empty word.
Word parse_word(std::string_view text);

// Splits text into symbols of `alphabet`, longest match first. Text that
// contains whitespace is split on whitespace instead. Throws
// std::invalid_argument when no tokenization exists.
Word tokenize_word(std::string_view text, const SymbolSet& alphabet);

// "eps" for the empty word. Symbols are joined without separator when
// `compact` is set, otherwise with single spaces.
std::string format_word(const Word& w, bool compact = false);

// True when every symbol name in the set is a single character.
bool single_char_names(const SymbolSet& symbols);

// Names must be nonempty, free of whitespace and of the characters
// []()*"#,:| and must not be a reserved word (eps, empty) or contain "->".
bool valid_symbol_name(std::string_view name);

std::vector<Symbol> sorted_by_name(const SymbolSet& symbols);

}  // namespace ctcg
