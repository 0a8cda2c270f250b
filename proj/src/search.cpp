// Level-synchronous search behind language_sample.
//
// A search state is the sentential form after some number of complete tree
// levels: terminals stay where they were produced, the nonterminals are the
// open nodes of the deepest level. Expanding a state picks one production
// for every open node at once, which yields the next level word directly.
//
// Conclusive modes carry a phase. In the generative phase nothing is
// checked; a state switches to the conclusion right after a level that
// holds a terminal (or at the root, for trees without terminals). Conclusion
// levels may not produce terminals and every one of them is checked.

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <unordered_set>

#include "ctcg/control_automaton.hpp"
#include "ctcg/regulation.hpp"

namespace ctcg {

namespace {

constexpr std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;
constexpr std::uint32_t no_parent = std::numeric_limits<std::uint32_t>::max();

struct PreparedGrammar {
  explicit PreparedGrammar(const Grammar& g) {
    std::uint32_t top = 0;
    for (Symbol s : g.nonterminals()) top = std::max(top, s.id());
    for (Symbol s : g.terminals()) top = std::max(top, s.id());
    index.assign(top + 1, -1);
    for (Symbol s : g.nonterminals()) {
      index[s.id()] = static_cast<int>(nts.size());
      nts.push_back(s);
    }
    by_lhs.resize(nts.size());
    for (const auto& p : g.productions()) {
      auto& list = by_lhs[static_cast<std::size_t>(nt(p.lhs[0]))];
      bool dup = std::any_of(list.begin(), list.end(),
                             [&](std::size_t q) { return rhs[q] == p.rhs; });
      if (dup) continue;
      list.push_back(rhs.size());
      rhs.push_back(p.rhs);
      std::size_t t = 0;
      for (Symbol s : p.rhs) t += nt(s) < 0 ? 1 : 0;
      rhs_terminals.push_back(t);
    }

    min_yield.assign(nts.size(), inf);
    can_emit.assign(nts.size(), false);
    erasable.assign(nts.size(), false);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t x = 0; x < nts.size(); ++x) {
        for (std::size_t q : by_lhs[x]) {
          std::size_t y = 0;
          bool emits = rhs_terminals[q] > 0;
          bool erases = rhs_terminals[q] == 0;
          for (Symbol s : rhs[q]) {
            int i = nt(s);
            if (i < 0) {
              ++y;
              continue;
            }
            y = std::min(inf, y + min_yield[static_cast<std::size_t>(i)]);
            emits = emits || can_emit[static_cast<std::size_t>(i)];
            erases = erases && erasable[static_cast<std::size_t>(i)];
          }
          if (y < min_yield[x]) min_yield[x] = y, changed = true;
          if (emits && !can_emit[x]) can_emit[x] = true, changed = true;
          if (erases && !erasable[x]) erasable[x] = true, changed = true;
        }
      }
    }
  }

  int nt(Symbol s) const { return s.id() < index.size() ? index[s.id()] : -1; }

  std::vector<int> index;  // symbol id -> nonterminal index, -1 for terminals
  std::vector<Symbol> nts;
  std::vector<std::vector<std::size_t>> by_lhs;  // nonterminal -> rhs indices
  std::vector<Word> rhs;
  std::vector<std::size_t> rhs_terminals;
  std::vector<std::size_t> min_yield;  // fewest terminals in a derived word
  std::vector<bool> can_emit;          // derives a form holding a terminal
  std::vector<bool> erasable;          // derives eps without terminal rules
};

enum class Phase : std::uint8_t { generative, conclusion };

struct State {
  Word form;
  std::uint32_t parent;
  std::vector<std::uint16_t> choices;  // rhs index per open node of the parent
  std::uint16_t level;
  Phase phase;
  std::uint16_t m;
  std::uint16_t key_level;  // part of the identity only for sc/lc
};

bool is_subsequence(const Word& small, const Word& big) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < big.size() && i < small.size(); ++j)
    if (big[j] == small[i]) ++i;
  return i == small.size();
}

class Search {
 public:
  Search(const Ctcg& h, Mode mode, const SampleBounds& bounds, const SampleOptions& options)
      : h_(h),
        g_(h.core()),
        control_(h.control()),
        mode_(mode),
        bounds_(bounds),
        options_(options),
        visited_(64, KeyHash{this}, KeyEq{this}) {}

  SampleResult run() {
    Word root{h_.core().start()};
    if (mode_ == Mode::tcg_full) {
      // level 0 is checked by every tree of depth >= 1
      if (control_.accepts(root)) add(State{root, no_parent, {}, 0, Phase::generative, 0, 0});
    } else {
      add(State{root, no_parent, {}, 0, Phase::generative, 0, 0});
      add(State{root, no_parent, {}, 0, Phase::conclusion, 0, 0});
    }
    for (std::size_t i = 0; i < states_.size() && !done_; ++i) expand(static_cast<std::uint32_t>(i));
    return finish();
  }

 private:
  struct Completion {
    std::uint32_t parent;
    std::vector<std::uint16_t> choices;
  };

  struct KeyHash {
    const Search* s;
    std::size_t operator()(std::uint32_t i) const {
      const State& x = s->states_[i];
      std::size_t h = WordHash{}(x.form);
      h ^= static_cast<std::size_t>(x.phase) * 0x9e3779b97f4a7c15ull;
      if (s->level_sensitive()) h ^= (std::size_t{x.key_level} << 20) ^ (std::size_t{x.m} << 40);
      return h;
    }
  };
  struct KeyEq {
    const Search* s;
    bool operator()(std::uint32_t a, std::uint32_t b) const {
      const State& x = s->states_[a];
      const State& y = s->states_[b];
      if (x.phase != y.phase || x.form != y.form) return false;
      return !s->level_sensitive() || (x.key_level == y.key_level && x.m == y.m);
    }
  };

  bool level_sensitive() const {
    return mode_ == Mode::short_conclusive || mode_ == Mode::long_conclusive;
  }

  Word word_of(const Word& form) const {
    Word w;
    for (Symbol s : form)
      if (g_.nt(s) < 0) w.push_back(s);
    return w;
  }

  // The terminal word of the state can no longer change.
  bool fixed_word(const State& s) const {
    if (s.phase == Phase::conclusion) return true;
    return std::none_of(s.form.begin(), s.form.end(), [&](Symbol x) {
      int i = g_.nt(x);
      return i >= 0 && g_.can_emit[static_cast<std::size_t>(i)];
    });
  }

  void add(State s) {
    if (s.phase == Phase::conclusion && options_.conclusion_dead && options_.conclusion_dead(s.form))
      return;
    Word w = word_of(s.form);
    if (options_.target && !is_subsequence(w, *options_.target)) return;
    bool fixed = fixed_word(s);
    if (fixed && accepted_.contains(w)) return;
    if (s.level >= bounds_.max_depth) {
      if (fixed) {
        cut_words_.insert(std::move(w));
      } else {
        cut_open_ = true;
      }
      return;
    }
    if (level_sensitive()) {
      s.key_level = s.level;
      if (s.phase == Phase::conclusion && mode_ == Mode::long_conclusive)
        s.key_level = static_cast<std::uint16_t>(std::min<std::size_t>(s.level, 2 * std::size_t{s.m} + 1));
    }
    states_.push_back(std::move(s));
    auto id = static_cast<std::uint32_t>(states_.size() - 1);
    if (!visited_.insert(id).second) states_.pop_back();
  }

  void accept(Word w, std::uint32_t parent, const std::vector<std::uint16_t>& choices) {
    if (w.size() > bounds_.max_len) return;
    if (options_.target && w != *options_.target) return;
    if (!accepted_.emplace(w, Completion{parent, choices}).second) return;
    if (options_.target) done_ = true;
  }

  struct Frame {
    ControlAutomaton::State ctl;
    std::size_t width;
    std::size_t terminals;  // terminals in the form after this level
    std::size_t pending;    // lower bound on terminals still to come
    bool level_nt;
    bool level_t;
  };

  void expand(std::uint32_t id) {
    const State& s = states_[id];
    Word w = word_of(s.form);
    if (fixed_word(s) && accepted_.contains(w)) return;
    if (options_.target && !is_subsequence(w, *options_.target)) return;
    cur_conclusion_ = s.phase == Phase::conclusion;
    cur_checks_ = mode_ == Mode::tcg_full || cur_conclusion_;
    cur_fixed_ = fixed_word(s);
    cur_word_ = w;

    open_.clear();
    for (Symbol x : s.form)
      if (int i = g_.nt(x); i >= 0) open_.push_back(static_cast<std::size_t>(i));
    rest_.assign(open_.size() + 1, 0);
    for (std::size_t k = open_.size(); k-- > 0;)
      rest_[k] = std::min(inf, rest_[k + 1] + g_.min_yield[open_[k]]);
    choices_.assign(open_.size(), 0);
    current_ = id;
    Frame f{control_.start(), 0, w.size(), 0, false, false};
    choose(0, f);
  }

  void note_cut() {
    if (cur_fixed_) {
      cut_words_.insert(cur_word_);
    } else {
      cut_open_ = true;
    }
  }

  void choose(std::size_t k, const Frame& f) {
    if (done_) return;
    if (k == open_.size()) {
      complete(f);
      return;
    }
    bool conclusion = cur_conclusion_;
    const auto& options = g_.by_lhs[open_[k]];
    for (std::size_t c = 0; c < options.size(); ++c) {
      std::size_t q = options[c];
      if (conclusion && g_.rhs_terminals[q] > 0) continue;
      const Word& rhs = g_.rhs[q];
      Frame n = f;
      n.width += rhs.size();
      if (n.width > bounds_.max_width) {
        note_cut();
        continue;
      }
      n.terminals += g_.rhs_terminals[q];
      bool viable = true;
      for (Symbol x : rhs) {
        int i = g_.nt(x);
        if (i >= 0) {
          auto xi = static_cast<std::size_t>(i);
          n.level_nt = true;
          n.pending = std::min(inf, n.pending + g_.min_yield[xi]);
          if (conclusion && !g_.erasable[xi]) viable = false;
        } else {
          n.level_t = true;
        }
        if (cur_checks_) n.ctl = control_.step(n.ctl, x);
      }
      if (!viable) continue;
      if (n.terminals + n.pending + rest_[k + 1] > bounds_.max_len) continue;
      if (cur_checks_ && control_.dead(n.ctl) && (conclusion || n.level_nt)) continue;
      choices_[k] = static_cast<std::uint16_t>(c);
      choose(k + 1, n);
    }
  }

  Word next_form(const State& s) const {
    Word out;
    std::size_t k = 0;
    for (Symbol x : s.form) {
      int i = g_.nt(x);
      if (i < 0) {
        out.push_back(x);
        continue;
      }
      const Word& rhs = g_.rhs[g_.by_lhs[static_cast<std::size_t>(i)][choices_[k++]]];
      out.insert(out.end(), rhs.begin(), rhs.end());
    }
    return out;
  }

  void complete(const Frame& f) {
    // add() may reallocate states_, so copy what is needed up front
    const State& s = states_[current_];
    auto level = static_cast<std::uint16_t>(s.level + 1);
    std::size_t m = s.m;
    Phase phase = s.phase;
    Word form = next_form(s);

    if (mode_ == Mode::tcg_full) {
      if (!f.level_nt) {
        accept(std::move(form), current_, choices_);
        return;
      }
      if (!control_.accepting(f.ctl)) return;
      add(State{std::move(form), current_, choices_, level, Phase::generative, 0, 0});
      return;
    }

    if (phase == Phase::conclusion) {
      if (!control_.accepting(f.ctl)) return;
      if (f.level_nt) {
        // one more level at least, so n >= level - m
        if (mode_ == Mode::short_conclusive && level > 2 * m) return;
        add(State{std::move(form), current_, choices_, level, Phase::conclusion,
                  static_cast<std::uint16_t>(m), 0});
        return;
      }
      std::size_t n = level - m - 1;
      if (mode_ == Mode::short_conclusive && m < n) return;
      if (mode_ == Mode::long_conclusive && m >= n) return;
      accept(word_of(form), current_, choices_);
      return;
    }

    if (!f.level_nt) {
      // the deepest terminal sits on the last level: no conclusion
      if (f.level_t && mode_ != Mode::long_conclusive) accept(std::move(form), current_, choices_);
      return;
    }
    State next{std::move(form), current_, choices_, level, Phase::generative, 0, 0};
    // staying generative only pays off if another terminal can still appear
    bool more = f.terminals < bounds_.max_len && !fixed_word(next);
    if (f.level_t) {
      State c = next;
      c.phase = Phase::conclusion;
      c.m = level;
      add(std::move(c));
    }
    if (more) add(std::move(next));
  }

  DerivationTree rebuild(const Completion& c) const {
    std::vector<std::pair<std::uint32_t, const std::vector<std::uint16_t>*>> path;
    path.emplace_back(c.parent, &c.choices);
    for (std::uint32_t i = c.parent; states_[i].parent != no_parent; i = states_[i].parent)
      path.emplace_back(states_[i].parent, &states_[i].choices);
    std::reverse(path.begin(), path.end());

    DerivationTree t(h_.core().start());
    std::vector<DerivationTree::NodeId> nodes{t.root()};
    for (auto [state, choices] : path) {
      const Word& form = states_[state].form;
      std::vector<DerivationTree::NodeId> next;
      std::size_t k = 0;
      for (std::size_t p = 0; p < form.size(); ++p) {
        int i = g_.nt(form[p]);
        if (i < 0) {
          next.push_back(nodes[p]);
          continue;
        }
        const Word& rhs = g_.rhs[g_.by_lhs[static_cast<std::size_t>(i)][(*choices)[k++]]];
        auto before = static_cast<DerivationTree::NodeId>(t.size());
        t.expand(nodes[p], rhs);
        if (rhs.empty()) continue;
        for (auto id = before; id < t.size(); ++id) next.push_back(id);
      }
      nodes = std::move(next);
    }
    return t;
  }

  SampleResult finish() {
    SampleResult out;
    out.states = states_.size();
    std::vector<std::pair<Word, const Completion*>> sorted;
    for (const auto& [w, c] : accepted_) sorted.emplace_back(w, &c);
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return length_lex_less(a.first, b.first); });
    for (const auto& [w, c] : sorted) {
      out.words.push_back(w);
      out.witnesses.push_back(rebuild(*c));
    }
    if (options_.target && done_) return out;
    out.truncated = cut_open_;
    for (const auto& w : cut_words_)
      if (w.size() <= bounds_.max_len && !accepted_.contains(w) &&
          (!options_.target || w == *options_.target))
        out.truncated = true;
    return out;
  }

  const Ctcg& h_;
  PreparedGrammar g_;
  ControlAutomaton control_;
  Mode mode_;
  SampleBounds bounds_;
  const SampleOptions& options_;

  std::vector<State> states_;
  std::unordered_set<std::uint32_t, KeyHash, KeyEq> visited_;
  std::map<Word, Completion> accepted_;
  std::set<Word> cut_words_;
  bool cut_open_ = false;
  bool done_ = false;

  std::uint32_t current_ = 0;
  bool cur_conclusion_ = false;
  bool cur_checks_ = false;
  bool cur_fixed_ = false;
  Word cur_word_;
  std::vector<std::size_t> open_;
  std::vector<std::size_t> rest_;
  std::vector<std::uint16_t> choices_;
};

}  // namespace

SampleResult language_sample(const Ctcg& h, Mode mode, const SampleBounds& bounds,
                             const SampleOptions& options) {
  if (bounds.max_depth == 0 || bounds.max_width == 0)
    throw std::invalid_argument("sample bounds must be positive");
  return Search(h, mode, bounds, options).run();
}

}  // namespace ctcg
