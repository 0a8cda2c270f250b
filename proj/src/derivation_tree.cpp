#include "ctcg/derivation_tree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ctcg/text_io.hpp"

namespace ctcg {

DerivationTree::DerivationTree(Symbol root) { nodes_.push_back({root, {}}); }

DerivationTree::NodeId DerivationTree::add_child(NodeId parent, Label label) {
  auto id = static_cast<NodeId>(nodes_.size());
  nodes_.at(parent);  // range check before growing
  nodes_.push_back({label, {}});
  nodes_[parent].children.push_back(id);
  return id;
}

void DerivationTree::expand(NodeId parent, const Word& rhs) {
  if (rhs.empty()) {
    add_child(parent, std::nullopt);
    return;
  }
  for (Symbol s : rhs) add_child(parent, s);
}

bool operator==(const DerivationTree& a, const DerivationTree& b) {
  // arena layouts may differ, so walk both trees in parallel
  std::vector<std::pair<DerivationTree::NodeId, DerivationTree::NodeId>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    const auto& nx = a.node(x);
    const auto& ny = b.node(y);
    if (nx.label != ny.label || nx.children.size() != ny.children.size()) return false;
    for (std::size_t i = 0; i < nx.children.size(); ++i)
      stack.emplace_back(nx.children[i], ny.children[i]);
  }
  return true;
}

std::vector<std::vector<DerivationTree::NodeId>> tree_levels(const DerivationTree& t) {
  std::vector<std::vector<DerivationTree::NodeId>> levels{{t.root()}};
  for (;;) {
    std::vector<DerivationTree::NodeId> next;
    for (auto id : levels.back())
      for (auto c : t.node(id).children) next.push_back(c);
    if (next.empty()) return levels;
    levels.push_back(std::move(next));
  }
}

Word frontier(const DerivationTree& t) {
  Word w;
  std::vector<DerivationTree::NodeId> stack{t.root()};
  while (!stack.empty()) {
    auto id = stack.back();
    stack.pop_back();
    const auto& n = t.node(id);
    if (n.children.empty()) {
      if (n.label) w.push_back(*n.label);
      continue;
    }
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
  }
  return w;
}

Word level_word(const DerivationTree& t, std::size_t i) {
  auto levels = tree_levels(t);
  if (i >= levels.size())
    throw std::out_of_range("level " + std::to_string(i) + " exceeds depth " +
                            std::to_string(levels.size() - 1));
  Word w;
  for (auto id : levels[i])
    if (t.node(id).label) w.push_back(*t.node(id).label);
  return w;
}

std::size_t depth(const DerivationTree& t) { return tree_levels(t).size() - 1; }

TreeCheck validate_tree(const Grammar& g, const DerivationTree& t) {
  if (!g.is_context_free()) throw std::invalid_argument("validate_tree needs a context-free grammar");
  const auto& root = t.node(t.root());
  if (!root.label || !g.is_nonterminal(*root.label))
    return {false, t.root(), "root is not a nonterminal"};

  for (DerivationTree::NodeId id = 0; id < t.size(); ++id) {
    const auto& n = t.node(id);
    if (!n.label) {
      if (!n.children.empty()) return {false, id, "epsilon node with children"};
      continue;
    }
    Symbol x = *n.label;
    if (!g.is_nonterminal(x) && !g.is_terminal(x)) return {false, id, "unknown symbol " + x.name()};
    if (n.children.empty()) continue;
    if (g.is_terminal(x)) return {false, id, "terminal " + x.name() + " has children"};

    Word rhs;
    bool epsilon_child = false;
    for (auto c : n.children) {
      const auto& label = t.node(c).label;
      if (label) {
        rhs.push_back(*label);
      } else {
        epsilon_child = true;
      }
    }
    if (epsilon_child && n.children.size() != 1)
      return {false, id, "epsilon leaf beside other children"};
    bool found = std::any_of(g.productions().begin(), g.productions().end(), [&](const Production& p) {
      return p.lhs.size() == 1 && p.lhs[0] == x && p.rhs == rhs;
    });
    if (!found)
      return {false, id, "no production " + x.name() + " -> " + format_word(rhs)};
  }
  return {};
}

std::string_view to_string(ConclusionKind kind) {
  switch (kind) {
    case ConclusionKind::short_conclusion: return "short";
    case ConclusionKind::long_conclusion: return "long";
    case ConclusionKind::no_conclusion: return "no-conclusion";
  }
  return "?";
}

TreeAnatomy anatomy(const DerivationTree& t, const SymbolSet& terminals) {
  auto levels = tree_levels(t);
  std::size_t d = levels.size() - 1;
  TreeAnatomy a;
  for (std::size_t i = 0; i <= d; ++i)
    for (auto id : levels[i])
      if (auto l = t.node(id).label; l && terminals.contains(*l)) a.m = i;
  if (a.m == d) return {a.m, 0, ConclusionKind::no_conclusion};
  a.n = d - a.m - 1;
  a.kind = a.m >= a.n ? ConclusionKind::short_conclusion : ConclusionKind::long_conclusion;
  return a;
}

TreeAnatomy anatomy(const DerivationTree& t, const Grammar& g) { return anatomy(t, g.terminals()); }

namespace {

std::string dot_label(const DerivationTree::Label& l) {
  if (!l) return "ε";
  std::string out;
  for (char c : l->name()) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const DerivationTree& t, const Grammar& g, bool overlay) {
  auto levels = tree_levels(t);
  std::vector<std::size_t> level_of(t.size());
  for (std::size_t i = 0; i < levels.size(); ++i)
    for (auto id : levels[i]) level_of[id] = i;

  TreeAnatomy a = anatomy(t, g);
  std::optional<DerivationTree::NodeId> deepest;
  for (auto id : levels[a.m])
    if (auto l = t.node(id).label; l && g.is_terminal(*l)) deepest = id;

  std::ostringstream out;
  out << "digraph derivation_tree {\n";
  out << "  node [shape=ellipse];\n";
  for (DerivationTree::NodeId id = 0; id < t.size(); ++id) {
    out << "  n" << id << " [label=\"" << dot_label(t.node(id).label) << "\"";
    if (overlay) {
      if (level_of[id] > a.m) {
        out << ", style=filled, fillcolor=lightgrey";
      } else {
        out << ", style=solid";
      }
      if (deepest && *deepest == id) out << ", color=red, fontcolor=red, penwidth=2";
    }
    out << "];\n";
  }
  for (DerivationTree::NodeId id = 0; id < t.size(); ++id)
    for (auto c : t.node(id).children) out << "  n" << id << " -> n" << c << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  DerivationTree run() {
    skip();
    auto root = label();
    if (!root) fail("root cannot be eps");
    DerivationTree t(*root);
    children(t, t.root());
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(line, column, message);
  }

  static bool space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

  void skip() {
    while (pos_ < text_.size() && space(text_[pos_])) ++pos_;
  }

  DerivationTree::Label label() {
    std::size_t b = pos_;
    while (pos_ < text_.size() && !space(text_[pos_]) && text_[pos_] != '[' && text_[pos_] != ']')
      ++pos_;
    if (pos_ == b) fail("expected a label");
    auto name = text_.substr(b, pos_ - b);
    if (name == "eps") return std::nullopt;
    if (!valid_symbol_name(name)) fail("invalid symbol name '" + std::string(name) + "'");
    return Symbol::named(name);
  }

  void children(DerivationTree& t, DerivationTree::NodeId parent) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != '[') return;
    if (!t.node(parent).label) fail("eps cannot have children");
    ++pos_;
    skip();
    if (pos_ < text_.size() && text_[pos_] == ']') fail("empty child list");
    while (pos_ < text_.size() && text_[pos_] != ']') {
      auto id = t.add_child(parent, label());
      children(t, id);
      skip();
    }
    if (pos_ >= text_.size()) fail("missing ']'");
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void bracket(const DerivationTree& t, DerivationTree::NodeId id, std::string& out) {
  const auto& n = t.node(id);
  out += n.label ? n.label->name() : "eps";
  if (n.children.empty()) return;
  out += '[';
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    if (i) out += ' ';
    bracket(t, n.children[i], out);
  }
  out += ']';
}

}  // namespace

DerivationTree parse_tree(std::string_view text) { return TreeParser(text).run(); }

std::string to_bracket(const DerivationTree& t) {
  std::string out;
  bracket(t, t.root(), out);
  return out;
}

}  // namespace ctcg
