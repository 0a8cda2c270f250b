#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctcg/control_expr.hpp"
#include "ctcg/derivation_tree.hpp"
#include "ctcg/grammar.hpp"
#include "ctcg/oracle.hpp"

namespace ctcg {

enum class Mode { tcg_full, conclusive, short_conclusive, long_conclusive };

std::string_view to_string(Mode mode);
// Accepts tcg, c, sc, lc and the long names printed by to_string.
std::optional<Mode> parse_mode(std::string_view text);

// Context-free core grammar plus control language.
class Ctcg {
 public:
  Ctcg(Grammar core, ControlLanguage control);

  const Grammar& core() const noexcept { return core_; }
  const ControlLanguage& control() const noexcept { return control_; }

 private:
  Grammar core_;
  ControlLanguage control_;
};

using LevelPredicate = std::function<bool(const Word&)>;

struct Acceptance {
  bool accepted = true;
  std::optional<std::size_t> failing_level;
  std::string reason;
};

// Level checks only go through `in_control`, so a recording predicate shows
// exactly which levels were inspected. Throws std::invalid_argument when the
// tree is not a derivation tree of `core` with a terminal frontier.
Acceptance accepts_levels(const Grammar& core, const DerivationTree& t, Mode mode,
                          const LevelPredicate& in_control);
Acceptance accepts_tree(const Ctcg& h, const DerivationTree& t, Mode mode);

struct TreeEnumeration {
  std::vector<DerivationTree> trees;
  bool truncated = false;
};

// Calls `visit` for every derivation tree with a terminal frontier, depth at
// most max_depth and every level word at most max_width symbols long.
// Order: by depth, then leftmost-production order. `visit` returns false
// to stop early. Returns true when the bounds cut off part of the space.
bool for_each_tree(const Grammar& g, std::size_t max_depth, std::size_t max_width,
                   const std::function<bool(const DerivationTree&)>& visit);
TreeEnumeration enumerate_trees(const Grammar& g, std::size_t max_depth, std::size_t max_width);

struct SampleBounds {
  std::size_t max_len = 0;
  std::size_t max_depth = 0;
  std::size_t max_width = 0;
};

struct SampleOptions {
  // Look for this word only and stop once it is accepted.
  std::optional<Word> target;
  // Sound liveness filter for sentential forms in the conclusion.
  DeadFormFilter conclusion_dead;
};

struct SampleResult {
  std::vector<Word> words;                 // length-lexicographic
  std::vector<DerivationTree> witnesses;   // witnesses[i] accepts words[i]
  bool truncated = false;
  std::size_t states = 0;

  bool contains(const Word& w) const;
  const DerivationTree* witness(const Word& w) const;
};

// Level-synchronous search over sentential forms. A derivation tree is
// grown one full level at a time, so level words are available as soon as
// a level is complete. The result equals the word set of
// sample_by_enumeration under the same bounds.
SampleResult language_sample(const Ctcg& h, Mode mode, const SampleBounds& bounds,
                             const SampleOptions& options = {});

// Reference implementation: filters enumerate_trees through accepts_tree.
SampleResult sample_by_enumeration(const Ctcg& h, Mode mode, const SampleBounds& bounds);

// Adds S -> S to the core grammar.
Ctcg pad_start(const Ctcg& h);

}  // namespace ctcg
