#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctcg/symbol.hpp"
#include "ctcg/text_io.hpp"

namespace ctcg {

// Extended union-free regular expression. There is deliberately no
// alternation node: Empty | Epsilon | SymbolSet | Concat | Star.
class ControlExpr {
 public:
  enum class Kind { empty, epsilon, symbols, concat, star };

  static ControlExpr empty();
  static ControlExpr epsilon();
  static ControlExpr symbol(Symbol s);
  static ControlExpr symbols(SymbolSet set);  // throws on an empty set
  static ControlExpr concat(ControlExpr left, ControlExpr right);
  static ControlExpr star(ControlExpr inner);

  // Right-nested concatenation of the factors; epsilon for none.
  static ControlExpr sequence(const std::vector<ControlExpr>& factors);
  static ControlExpr word(const Word& w);

  Kind kind() const noexcept;
  const SymbolSet& symbol_set() const;  // kind() == symbols
  const ControlExpr& left() const;      // kind() == concat
  const ControlExpr& right() const;     // kind() == concat
  const ControlExpr& inner() const;     // kind() == star

  friend bool operator==(const ControlExpr& a, const ControlExpr& b);

 private:
  struct Node;
  explicit ControlExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// A control language given as a finite union of union-free expressions.
// Constructed controls are single alternatives; a union shows up only in
// hand-written controls that need one.
struct ControlLanguage {
  std::vector<ControlExpr> alternatives;

  ControlLanguage() = default;
  ControlLanguage(ControlExpr e) : alternatives{std::move(e)} {}  // NOLINT
  explicit ControlLanguage(std::vector<ControlExpr> alts) : alternatives(std::move(alts)) {}
};

bool is_union_free(const ControlExpr& e);
bool is_union_free(const ControlLanguage& c);

bool matches(const ControlExpr& e, const Word& w);
bool matches(const ControlLanguage& c, const Word& w);

struct OpCounts {
  std::size_t stars = 0;
  std::size_t concats = 0;
  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

OpCounts op_counts(const ControlExpr& e);

SymbolSet alphabet_of(const ControlExpr& e);
SymbolSet alphabet_of(const ControlLanguage& c);

struct EquivResult {
  bool equivalent = true;
  std::optional<Word> counterexample;  // length-lexicographically first
};

EquivResult bounded_equiv(const ControlExpr& e1, const ControlExpr& e2, const SymbolSet& alphabet,
                          std::size_t max_len);

// Syntax: symbol tokens, [x y] sets, juxtaposition, postfix *, ( )
// grouping, eps, empty, "x y z" word literals and # comments.
ControlExpr parse_expr(std::string_view text);
std::string format_expr(const ControlExpr& e);

// A control file holds one expression or several separated by a top-level
// '|'. Each alternative must itself be union free.
ControlLanguage parse_control(std::string_view text);
ControlLanguage load_control(const std::filesystem::path& path);
std::string format_control(const ControlLanguage& c);

}  // namespace ctcg
