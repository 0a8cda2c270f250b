#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctcg/grammar.hpp"

namespace ctcg {

// Ordered labeled tree stored as an arena; node 0 is the root. A missing
// label stands for an epsilon leaf.
class DerivationTree {
 public:
  using NodeId = std::uint32_t;
  using Label = std::optional<Symbol>;

  struct Node {
    Label label;
    std::vector<NodeId> children;
  };

  explicit DerivationTree(Symbol root);

  NodeId root() const noexcept { return 0; }
  NodeId add_child(NodeId parent, Label label);
  // Appends the children for `rhs` (a single epsilon leaf when empty).
  void expand(NodeId parent, const Word& rhs);

  const Node& node(NodeId id) const { return nodes_.at(id); }
  std::size_t size() const noexcept { return nodes_.size(); }

  friend bool operator==(const DerivationTree& a, const DerivationTree& b);

 private:
  std::vector<Node> nodes_;
};

// Nodes grouped by distance from the root, each level left to right.
std::vector<std::vector<DerivationTree::NodeId>> tree_levels(const DerivationTree& t);

Word frontier(const DerivationTree& t);
Word level_word(const DerivationTree& t, std::size_t i);  // throws std::out_of_range
std::size_t depth(const DerivationTree& t);

struct TreeCheck {
  bool valid = true;
  std::optional<DerivationTree::NodeId> node;
  std::string message;
};

TreeCheck validate_tree(const Grammar& g, const DerivationTree& t);

enum class ConclusionKind { short_conclusion, long_conclusion, no_conclusion };

std::string_view to_string(ConclusionKind kind);

struct TreeAnatomy {
  std::size_t m = 0;  // deepest level holding a terminal (0 if none)
  std::size_t n = 0;  // depth of the forest rooted at level m + 1
  ConclusionKind kind = ConclusionKind::no_conclusion;

  friend bool operator==(const TreeAnatomy&, const TreeAnatomy&) = default;
};

TreeAnatomy anatomy(const DerivationTree& t, const SymbolSet& terminals);
TreeAnatomy anatomy(const DerivationTree& t, const Grammar& g);

// Graphviz digraph. With the overlay, conclusion nodes are filled grey and
// the rightmost terminal of level m is drawn in red.
std::string to_dot(const DerivationTree& t, const Grammar& g, bool overlay);

// Bracket form: S[A[a] B[eps]]; whitespace insensitive.
DerivationTree parse_tree(std::string_view text);
std::string to_bracket(const DerivationTree& t);

}  // namespace ctcg
