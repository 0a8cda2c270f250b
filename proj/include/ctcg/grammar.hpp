#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ctcg/symbol.hpp"

namespace ctcg {

enum class GrammarKind { type0, context_free, right_linear };

std::string_view to_string(GrammarKind kind);

struct Production {
  std::string label;
  Word lhs;
  Word rhs;

  friend bool operator==(const Production&, const Production&) = default;
};

class GrammarError : public std::runtime_error {
 public:
  explicit GrammarError(const std::string& message, std::string label = {})
      : std::runtime_error(label.empty() ? message : message + " (production " + label + ")"),
        label_(std::move(label)) {}

  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

// Immutable grammar (N, T, P, S). The constructor validates the alphabets
// and productions; empty labels become p1..pn by position.
class Grammar {
 public:
  Grammar(SymbolSet nonterminals, SymbolSet terminals, std::vector<Production> productions,
          Symbol start);

  const SymbolSet& nonterminals() const noexcept { return nonterminals_; }
  const SymbolSet& terminals() const noexcept { return terminals_; }
  const std::vector<Production>& productions() const noexcept { return productions_; }
  Symbol start() const noexcept { return start_; }
  GrammarKind kind() const noexcept { return kind_; }

  bool is_nonterminal(Symbol s) const { return nonterminals_.contains(s); }
  bool is_terminal(Symbol s) const { return terminals_.contains(s); }
  bool is_terminal_word(const Word& w) const;
  bool is_context_free() const noexcept { return kind_ != GrammarKind::type0; }

  const Production* find(std::string_view label) const;

  // Appends a production unless one with the same sides already exists.
  Grammar with_production(Production p) const;

 private:
  SymbolSet nonterminals_;
  SymbolSet terminals_;
  std::vector<Production> productions_;
  Symbol start_;
  GrammarKind kind_;
};

GrammarKind classify_grammar(const Grammar& g);

std::size_t occur(const Word& w, const SymbolSet& t);
std::size_t occur(const Word& w, Symbol s);

struct DerivationStep {
  Word result;
  std::string label;
  std::size_t position;

  friend bool operator==(const DerivationStep&, const DerivationStep&) = default;
};

// Every one-step rewrite of w, by production order then by position.
std::vector<DerivationStep> derive_step(const Grammar& g, const Word& w);

class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(Symbol s)
      : std::invalid_argument("symbol not in map domain: " + s.name()), symbol_(s) {}
  Symbol symbol() const noexcept { return symbol_; }

 private:
  Symbol symbol_;
};

class SymbolMap {
 public:
  SymbolMap() = default;
  explicit SymbolMap(std::map<Symbol, Word> images) : images_(std::move(images)) {}

  SymbolMap& set(Symbol s, Word image);
  SymbolMap& identity_on(const SymbolSet& symbols);

  bool contains(Symbol s) const { return images_.contains(s); }
  const Word& image(Symbol s) const;

 private:
  std::map<Symbol, Word> images_;
};

Word apply_map(const SymbolMap& m, const Word& w);

}  // namespace ctcg
