#include "ctcg/control_automaton.hpp"

#include <algorithm>

namespace ctcg {

namespace {

struct Info {
  bool nullable;
  std::vector<int> first;
  std::vector<int> last;
};

void add_all(std::vector<int>& into, const std::vector<int>& from) {
  into.insert(into.end(), from.begin(), from.end());
}

struct Builder {
  std::vector<SymbolSet>& labels;
  std::vector<std::vector<int>>& follow;

  Info visit(const ControlExpr& e) {
    switch (e.kind()) {
      case ControlExpr::Kind::empty: return {false, {}, {}};
      case ControlExpr::Kind::epsilon: return {true, {}, {}};
      case ControlExpr::Kind::symbols: {
        int p = static_cast<int>(labels.size());
        labels.push_back(e.symbol_set());
        follow.emplace_back();
        return {false, {p}, {p}};
      }
      case ControlExpr::Kind::concat: {
        Info l = visit(e.left());
        Info r = visit(e.right());
        for (int p : l.last) add_all(follow[static_cast<std::size_t>(p)], r.first);
        Info out{l.nullable && r.nullable, l.first, r.last};
        if (l.nullable) add_all(out.first, r.first);
        if (r.nullable) add_all(out.last, l.last);
        return out;
      }
      case ControlExpr::Kind::star: {
        Info i = visit(e.inner());
        for (int p : i.last) add_all(follow[static_cast<std::size_t>(p)], i.first);
        return {true, i.first, i.last};
      }
    }
    return {false, {}, {}};
  }
};

void normalize(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

ControlAutomaton::ControlAutomaton(const ControlLanguage& c) {
  labels_.emplace_back();
  follow_.emplace_back();
  bool nullable = false;
  Builder b{labels_, follow_};
  std::vector<int> initial, lasts;
  for (const auto& alt : c.alternatives) {
    Info i = b.visit(alt);
    nullable = nullable || i.nullable;
    add_all(initial, i.first);
    add_all(lasts, i.last);
  }
  follow_[0] = initial;
  for (auto& f : follow_) normalize(f);
  last_.assign(labels_.size(), false);
  last_[0] = nullable;
  for (int p : lasts) last_[static_cast<std::size_t>(p)] = true;

  intern({});   // dead_state
  intern({0});  // start
}

ControlAutomaton::State ControlAutomaton::intern(std::vector<int> subset) const {
  auto it = ids_.find(subset);
  if (it != ids_.end()) return it->second;
  auto id = static_cast<State>(subsets_.size());
  bool acc = std::any_of(subset.begin(), subset.end(),
                         [&](int p) { return last_[static_cast<std::size_t>(p)]; });
  accepting_.push_back(acc);
  ids_.emplace(subset, id);
  subsets_.push_back(std::move(subset));
  return id;
}

ControlAutomaton::State ControlAutomaton::step(State s, Symbol x) const {
  if (s == dead_state) return dead_state;
  std::uint64_t key = (static_cast<std::uint64_t>(s) << 32) | x.id();
  if (auto it = delta_.find(key); it != delta_.end()) return it->second;
  std::vector<int> next;
  for (int p : subsets_[static_cast<std::size_t>(s)])
    for (int q : follow_[static_cast<std::size_t>(p)])
      if (labels_[static_cast<std::size_t>(q)].contains(x)) next.push_back(q);
  normalize(next);
  State t = intern(std::move(next));
  delta_.emplace(key, t);
  return t;
}

bool ControlAutomaton::accepts(const Word& w) const {
  State s = start();
  for (Symbol x : w) {
    s = step(s, x);
    if (s == dead_state) return false;
  }
  return accepting(s);
}

}  // namespace ctcg
