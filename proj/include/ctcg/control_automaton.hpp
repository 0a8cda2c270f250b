#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "ctcg/control_expr.hpp"

namespace ctcg {

// Position (Glushkov) automaton of a control language, determinized lazily.
// Each step costs at most O(positions^2) the first time a subset/symbol pair
// is seen and a hash lookup afterwards. The transition cache makes step()
// unsafe to call concurrently on one instance.
class ControlAutomaton {
 public:
  using State = std::int32_t;
  static constexpr State dead_state = 0;

  explicit ControlAutomaton(const ControlLanguage& c);

  State start() const noexcept { return 1; }
  State step(State s, Symbol x) const;
  bool accepting(State s) const { return accepting_[static_cast<std::size_t>(s)]; }
  bool dead(State s) const noexcept { return s == dead_state; }
  bool accepts(const Word& w) const;

  std::size_t positions() const noexcept { return labels_.size() - 1; }

 private:
  State intern(std::vector<int> subset) const;

  std::vector<SymbolSet> labels_;          // index 0 is the initial pseudo position
  std::vector<std::vector<int>> follow_;
  std::vector<bool> last_;

  mutable std::vector<std::vector<int>> subsets_;
  mutable std::vector<bool> accepting_;
  mutable std::map<std::vector<int>, State> ids_;
  mutable std::unordered_map<std::uint64_t, State> delta_;
};

}  // namespace ctcg
