#include "ctcg/control_expr.hpp"

#include <algorithm>
#include <stdexcept>

#include "ctcg/control_automaton.hpp"

namespace ctcg {

struct ControlExpr::Node {
  Kind kind;
  SymbolSet set;
  std::optional<ControlExpr> a;
  std::optional<ControlExpr> b;
};

ControlExpr ControlExpr::empty() {
  static const ControlExpr e(std::make_shared<const Node>(Node{Kind::empty, {}, {}, {}}));
  return e;
}

ControlExpr ControlExpr::epsilon() {
  static const ControlExpr e(std::make_shared<const Node>(Node{Kind::epsilon, {}, {}, {}}));
  return e;
}

ControlExpr ControlExpr::symbol(Symbol s) { return symbols(SymbolSet{s}); }

ControlExpr ControlExpr::symbols(SymbolSet set) {
  if (set.empty()) throw std::invalid_argument("symbol set must be nonempty");
  return ControlExpr(std::make_shared<const Node>(Node{Kind::symbols, std::move(set), {}, {}}));
}

ControlExpr ControlExpr::concat(ControlExpr left, ControlExpr right) {
  return ControlExpr(
      std::make_shared<const Node>(Node{Kind::concat, {}, std::move(left), std::move(right)}));
}

ControlExpr ControlExpr::star(ControlExpr inner) {
  return ControlExpr(std::make_shared<const Node>(Node{Kind::star, {}, std::move(inner), {}}));
}

ControlExpr ControlExpr::sequence(const std::vector<ControlExpr>& factors) {
  if (factors.empty()) return epsilon();
  ControlExpr acc = factors.back();
  for (auto it = factors.rbegin() + 1; it != factors.rend(); ++it) acc = concat(*it, acc);
  return acc;
}

ControlExpr ControlExpr::word(const Word& w) {
  std::vector<ControlExpr> factors;
  for (Symbol s : w) factors.push_back(symbol(s));
  return sequence(factors);
}

ControlExpr::Kind ControlExpr::kind() const noexcept { return node_->kind; }

const SymbolSet& ControlExpr::symbol_set() const {
  if (kind() != Kind::symbols) throw std::logic_error("not a symbol set");
  return node_->set;
}

const ControlExpr& ControlExpr::left() const {
  if (kind() != Kind::concat) throw std::logic_error("not a concatenation");
  return *node_->a;
}

const ControlExpr& ControlExpr::right() const {
  if (kind() != Kind::concat) throw std::logic_error("not a concatenation");
  return *node_->b;
}

const ControlExpr& ControlExpr::inner() const {
  if (kind() != Kind::star) throw std::logic_error("not a star");
  return *node_->a;
}

bool operator==(const ControlExpr& x, const ControlExpr& y) {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case ControlExpr::Kind::empty:
    case ControlExpr::Kind::epsilon: return true;
    case ControlExpr::Kind::symbols: return x.symbol_set() == y.symbol_set();
    case ControlExpr::Kind::concat: return x.left() == y.left() && x.right() == y.right();
    case ControlExpr::Kind::star: return x.inner() == y.inner();
  }
  return false;
}

bool is_union_free(const ControlExpr& e) {
  switch (e.kind()) {
    case ControlExpr::Kind::empty:
    case ControlExpr::Kind::epsilon: return true;
    case ControlExpr::Kind::symbols: return e.symbol_set().size() == 1;
    case ControlExpr::Kind::concat: return is_union_free(e.left()) && is_union_free(e.right());
    case ControlExpr::Kind::star: return is_union_free(e.inner());
  }
  return false;
}

bool is_union_free(const ControlLanguage& c) {
  return c.alternatives.size() == 1 && is_union_free(c.alternatives.front());
}

bool matches(const ControlExpr& e, const Word& w) { return ControlAutomaton(e).accepts(w); }

bool matches(const ControlLanguage& c, const Word& w) { return ControlAutomaton(c).accepts(w); }

OpCounts op_counts(const ControlExpr& e) {
  switch (e.kind()) {
    case ControlExpr::Kind::empty:
    case ControlExpr::Kind::epsilon:
    case ControlExpr::Kind::symbols: return {};
    case ControlExpr::Kind::concat: {
      auto l = op_counts(e.left());
      auto r = op_counts(e.right());
      return {l.stars + r.stars, l.concats + r.concats + 1};
    }
    case ControlExpr::Kind::star: {
      auto i = op_counts(e.inner());
      return {i.stars + 1, i.concats};
    }
  }
  return {};
}

SymbolSet alphabet_of(const ControlExpr& e) {
  switch (e.kind()) {
    case ControlExpr::Kind::empty:
    case ControlExpr::Kind::epsilon: return {};
    case ControlExpr::Kind::symbols: return e.symbol_set();
    case ControlExpr::Kind::concat: {
      auto s = alphabet_of(e.left());
      s.merge(alphabet_of(e.right()));
      return s;
    }
    case ControlExpr::Kind::star: return alphabet_of(e.inner());
  }
  return {};
}

SymbolSet alphabet_of(const ControlLanguage& c) {
  SymbolSet s;
  for (const auto& e : c.alternatives) s.merge(alphabet_of(e));
  return s;
}

EquivResult bounded_equiv(const ControlExpr& e1, const ControlExpr& e2, const SymbolSet& alphabet,
                          std::size_t max_len) {
  ControlAutomaton a1(e1), a2(e2);
  auto symbols = sorted_by_name(alphabet);

  // Level k holds all words of length k in lexicographic order, so the first
  // disagreement found is the length-lexicographic minimum.
  struct Item {
    Word w;
    ControlAutomaton::State s1, s2;
  };
  std::vector<Item> level{{Word{}, a1.start(), a2.start()}};
  for (std::size_t k = 0;; ++k) {
    for (const auto& it : level)
      if (a1.accepting(it.s1) != a2.accepting(it.s2)) return {false, it.w};
    if (k == max_len || symbols.empty()) break;
    std::vector<Item> next;
    next.reserve(level.size() * symbols.size());
    for (const auto& it : level) {
      for (Symbol s : symbols) {
        Item n{it.w, a1.step(it.s1, s), a2.step(it.s2, s)};
        n.w.push_back(s);
        next.push_back(std::move(n));
      }
    }
    level = std::move(next);
  }
  return {true, std::nullopt};
}

}  // namespace ctcg
