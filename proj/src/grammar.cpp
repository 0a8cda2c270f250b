#include "ctcg/grammar.hpp"

#include <algorithm>
#include <set>

namespace ctcg {

std::string_view to_string(GrammarKind kind) {
  switch (kind) {
    case GrammarKind::type0: return "type-0";
    case GrammarKind::context_free: return "context-free";
    case GrammarKind::right_linear: return "right-linear";
  }
  return "?";
}

namespace {

GrammarKind classify(const SymbolSet& nonterminals, const std::vector<Production>& ps) {
  bool context_free = true;
  bool right_linear = true;
  for (const auto& p : ps) {
    if (p.lhs.size() != 1 || !nonterminals.contains(p.lhs[0])) {
      context_free = right_linear = false;
      break;
    }
    // rhs in T* (N | eps)
    for (std::size_t i = 0; i < p.rhs.size(); ++i) {
      bool last = i + 1 == p.rhs.size();
      if (nonterminals.contains(p.rhs[i]) && !last) right_linear = false;
    }
  }
  if (right_linear) return GrammarKind::right_linear;
  return context_free ? GrammarKind::context_free : GrammarKind::type0;
}

}  // namespace

Grammar::Grammar(SymbolSet nonterminals, SymbolSet terminals, std::vector<Production> productions,
                 Symbol start)
    : nonterminals_(std::move(nonterminals)),
      terminals_(std::move(terminals)),
      productions_(std::move(productions)),
      start_(start) {
  for (Symbol s : nonterminals_)
    if (terminals_.contains(s)) throw GrammarError("alphabet overlap: " + s.name());
  if (!nonterminals_.contains(start_))
    throw GrammarError("start symbol is not a nonterminal: " + start_.name());

  std::set<std::string> labels;
  for (std::size_t i = 0; i < productions_.size(); ++i) {
    auto& p = productions_[i];
    if (p.label.empty()) p.label = "p" + std::to_string(i + 1);
    if (!labels.insert(p.label).second) throw GrammarError("duplicate label", p.label);
    if (p.lhs.empty()) throw GrammarError("empty left-hand side", p.label);
    for (const Word* side : {&p.lhs, &p.rhs})
      for (Symbol s : *side)
        if (!nonterminals_.contains(s) && !terminals_.contains(s))
          throw GrammarError("undeclared symbol " + s.name(), p.label);
    if (std::none_of(p.lhs.begin(), p.lhs.end(), [&](Symbol s) { return is_nonterminal(s); }))
      throw GrammarError("left-hand side is a terminal word", p.label);
  }
  kind_ = classify(nonterminals_, productions_);
}

bool Grammar::is_terminal_word(const Word& w) const {
  return std::all_of(w.begin(), w.end(), [&](Symbol s) { return is_terminal(s); });
}

const Production* Grammar::find(std::string_view label) const {
  for (const auto& p : productions_)
    if (p.label == label) return &p;
  return nullptr;
}

Grammar Grammar::with_production(Production p) const {
  for (const auto& q : productions_)
    if (q.lhs == p.lhs && q.rhs == p.rhs) return *this;
  auto ps = productions_;
  if (p.label.empty() || find(p.label)) {
    std::string base = p.label.empty() ? "p" : p.label;
    for (std::size_t k = ps.size() + 1;; ++k) {
      std::string candidate = base + std::to_string(k);
      if (!find(candidate)) {
        p.label = candidate;
        break;
      }
    }
  }
  ps.push_back(std::move(p));
  return Grammar(nonterminals_, terminals_, std::move(ps), start_);
}

GrammarKind classify_grammar(const Grammar& g) { return g.kind(); }

std::size_t occur(const Word& w, const SymbolSet& t) {
  return static_cast<std::size_t>(
      std::count_if(w.begin(), w.end(), [&](Symbol s) { return t.contains(s); }));
}

std::size_t occur(const Word& w, Symbol s) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), s));
}

std::vector<DerivationStep> derive_step(const Grammar& g, const Word& w) {
  std::vector<DerivationStep> out;
  for (const auto& p : g.productions()) {
    if (p.lhs.size() > w.size()) continue;
    for (std::size_t i = 0; i + p.lhs.size() <= w.size(); ++i) {
      if (!std::equal(p.lhs.begin(), p.lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(i)))
        continue;
      Word next;
      next.reserve(w.size() - p.lhs.size() + p.rhs.size());
      next.insert(next.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      next.insert(next.end(), p.rhs.begin(), p.rhs.end());
      next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(i + p.lhs.size()), w.end());
      out.push_back({std::move(next), p.label, i});
    }
  }
  return out;
}

SymbolMap& SymbolMap::set(Symbol s, Word image) {
  images_[s] = std::move(image);
  return *this;
}

SymbolMap& SymbolMap::identity_on(const SymbolSet& symbols) {
  for (Symbol s : symbols) images_[s] = Word{s};
  return *this;
}

const Word& SymbolMap::image(Symbol s) const {
  auto it = images_.find(s);
  if (it == images_.end()) throw DomainError(s);
  return it->second;
}

Word apply_map(const SymbolMap& m, const Word& w) {
  Word out;
  for (Symbol s : w) {
    const Word& img = m.image(s);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

}  // namespace ctcg
