#include "ctcg/regulation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ctcg/control_automaton.hpp"

namespace ctcg {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::tcg_full: return "tcg-full";
    case Mode::conclusive: return "conclusive";
    case Mode::short_conclusive: return "short-conclusive";
    case Mode::long_conclusive: return "long-conclusive";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "tcg" || text == "tcg-full") return Mode::tcg_full;
  if (text == "c" || text == "conclusive") return Mode::conclusive;
  if (text == "sc" || text == "short-conclusive") return Mode::short_conclusive;
  if (text == "lc" || text == "long-conclusive") return Mode::long_conclusive;
  return std::nullopt;
}

Ctcg::Ctcg(Grammar core, ControlLanguage control)
    : core_(std::move(core)), control_(std::move(control)) {
  if (!core_.is_context_free()) throw GrammarError("core grammar must be context-free");
  for (Symbol s : alphabet_of(control_))
    if (!core_.is_nonterminal(s) && !core_.is_terminal(s))
      throw GrammarError("control symbol outside the core alphabet: " + s.name());
}

Acceptance accepts_levels(const Grammar& core, const DerivationTree& t, Mode mode,
                          const LevelPredicate& in_control) {
  if (auto check = validate_tree(core, t); !check.valid)
    throw std::invalid_argument("not a derivation tree: " + check.message);
  if (!core.is_terminal_word(frontier(t)))
    throw std::invalid_argument("frontier is not a terminal word");

  auto levels = tree_levels(t);
  std::size_t d = levels.size() - 1;
  auto word_at = [&](std::size_t i) {
    Word w;
    for (auto id : levels[i])
      if (t.node(id).label) w.push_back(*t.node(id).label);
    return w;
  };

  if (mode == Mode::tcg_full) {
    for (std::size_t i = 0; i < d; ++i)
      if (!in_control(word_at(i))) return {false, i, "level word not in control"};
    return {};
  }

  TreeAnatomy a = anatomy(t, core);
  for (std::size_t i = a.m + 1; i <= d; ++i)
    if (!in_control(word_at(i))) return {false, i, "level word not in control"};
  if (mode == Mode::short_conclusive && a.kind == ConclusionKind::long_conclusion)
    return {false, std::nullopt, "conclusion is long"};
  if (mode == Mode::long_conclusive && a.kind != ConclusionKind::long_conclusion)
    return {false, std::nullopt, "conclusion is not long"};
  return {};
}

Acceptance accepts_tree(const Ctcg& h, const DerivationTree& t, Mode mode) {
  ControlAutomaton control(h.control());
  return accepts_levels(h.core(), t, mode, [&](const Word& w) { return control.accepts(w); });
}

namespace {

class TreeEnumerator {
 public:
  TreeEnumerator(const Grammar& g, std::size_t max_width,
                 const std::function<bool(const DerivationTree&)>& visit)
      : g_(g), max_width_(max_width), visit_(visit) {
    // identical productions would produce structurally equal trees
    for (const auto& p : g.productions()) {
      auto& list = by_lhs_[p.lhs.front()];
      if (std::find(list.begin(), list.end(), p.rhs) == list.end()) list.push_back(p.rhs);
    }
  }

  // Emits trees of depth exactly `depth`; false once visit asked to stop.
  bool pass(std::size_t depth, bool last_pass) {
    depth_ = depth;
    last_pass_ = last_pass;
    DerivationTree t(g_.start());
    return grow(t, {t.root()}, 0);
  }

  bool truncated() const noexcept { return truncated_; }

 private:
  bool grow(const DerivationTree& t, const std::vector<DerivationTree::NodeId>& open,
            std::size_t level) {
    if (open.empty()) return level == depth_ ? visit_(t) : true;
    if (level == depth_) {
      if (last_pass_) truncated_ = true;
      return true;
    }
    return choose(t, open, 0, 0, {}, level);
  }

  bool choose(const DerivationTree& t, const std::vector<DerivationTree::NodeId>& open,
              std::size_t k, std::size_t width, const std::vector<DerivationTree::NodeId>& next,
              std::size_t level) {
    if (k == open.size()) return grow(t, next, level + 1);
    auto it = by_lhs_.find(*t.node(open[k]).label);
    if (it == by_lhs_.end()) return true;
    for (const Word& rhs : it->second) {
      if (width + rhs.size() > max_width_) {
        truncated_ = true;
        continue;
      }
      DerivationTree u = t;
      auto before = u.size();
      u.expand(open[k], rhs);
      auto after_open = next;
      for (auto id = static_cast<DerivationTree::NodeId>(before); id < u.size(); ++id)
        if (auto l = u.node(id).label; l && g_.is_nonterminal(*l)) after_open.push_back(id);
      if (!choose(u, open, k + 1, width + rhs.size(), after_open, level)) return false;
    }
    return true;
  }

  const Grammar& g_;
  std::size_t max_width_;
  const std::function<bool(const DerivationTree&)>& visit_;
  std::map<Symbol, std::vector<Word>> by_lhs_;
  std::size_t depth_ = 0;
  bool last_pass_ = false;
  bool truncated_ = false;
};

}  // namespace

bool for_each_tree(const Grammar& g, std::size_t max_depth, std::size_t max_width,
                   const std::function<bool(const DerivationTree&)>& visit) {
  if (!g.is_context_free()) throw std::invalid_argument("tree enumeration needs a context-free grammar");
  TreeEnumerator e(g, max_width, visit);
  for (std::size_t d = 0; d <= max_depth; ++d)
    if (!e.pass(d, d == max_depth)) break;
  return e.truncated();
}

TreeEnumeration enumerate_trees(const Grammar& g, std::size_t max_depth, std::size_t max_width) {
  TreeEnumeration out;
  out.truncated = for_each_tree(g, max_depth, max_width, [&](const DerivationTree& t) {
    out.trees.push_back(t);
    return true;
  });
  return out;
}

bool SampleResult::contains(const Word& w) const {
  return std::binary_search(words.begin(), words.end(), w, LengthLexLess{});
}

const DerivationTree* SampleResult::witness(const Word& w) const {
  auto it = std::lower_bound(words.begin(), words.end(), w, LengthLexLess{});
  if (it == words.end() || *it != w) return nullptr;
  return &witnesses[static_cast<std::size_t>(it - words.begin())];
}

SampleResult sample_by_enumeration(const Ctcg& h, Mode mode, const SampleBounds& bounds) {
  ControlAutomaton control(h.control());
  LevelPredicate in_control = [&](const Word& w) { return control.accepts(w); };
  std::map<Word, DerivationTree, LengthLexLess> found;
  SampleResult out;
  out.truncated = for_each_tree(h.core(), bounds.max_depth, bounds.max_width, [&](const DerivationTree& t) {
    ++out.states;
    Word w = frontier(t);
    if (w.size() > bounds.max_len || found.contains(w)) return true;
    if (accepts_levels(h.core(), t, mode, in_control).accepted) found.emplace(w, t);
    return true;
  });
  for (auto& [w, t] : found) {
    out.words.push_back(w);
    out.witnesses.push_back(t);
  }
  return out;
}

Ctcg pad_start(const Ctcg& h) {
  Symbol s = h.core().start();
  return Ctcg(h.core().with_production({"pad", {s}, {s}}), h.control());
}

}  // namespace ctcg
