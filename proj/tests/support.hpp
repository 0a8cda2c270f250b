#pragma once

#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ctcg/control_expr.hpp"
#include "ctcg/symbol.hpp"

namespace ctcg::testing {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(CTCG_FIXTURE_DIR) / name;
}

// End positions j such that w[i, j) is in L(e). Straight recursion on the
// expression tree, no automaton involved.
inline std::set<std::size_t> ref_ends(const ControlExpr& e, const Word& w, std::size_t i) {
  using K = ControlExpr::Kind;
  switch (e.kind()) {
    case K::empty: return {};
    case K::epsilon: return {i};
    case K::symbols:
      if (i < w.size() && e.symbol_set().contains(w[i])) return {i + 1};
      return {};
    case K::concat: {
      std::set<std::size_t> out;
      for (auto k : ref_ends(e.left(), w, i)) {
        auto r = ref_ends(e.right(), w, k);
        out.insert(r.begin(), r.end());
      }
      return out;
    }
    case K::star: {
      std::set<std::size_t> out{i};
      std::vector<std::size_t> todo{i};
      while (!todo.empty()) {
        auto k = todo.back();
        todo.pop_back();
        for (auto j : ref_ends(e.inner(), w, k))
          if (out.insert(j).second) todo.push_back(j);
      }
      return out;
    }
  }
  return {};
}

inline bool ref_match(const ControlExpr& e, const Word& w) { return ref_ends(e, w, 0).contains(w.size()); }

inline std::vector<Word> all_words(const std::vector<Symbol>& sigma, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t from = 0;
  for (std::size_t k = 0; k < max_len; ++k) {
    std::size_t to = out.size();
    for (std::size_t i = from; i < to; ++i)
      for (Symbol s : sigma) {
        Word w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    from = to;
  }
  return out;
}

inline ControlExpr random_expr(std::mt19937& rng, const std::vector<Symbol>& sigma, int budget) {
  std::uniform_int_distribution<int> pick(0, 9);
  int r = budget <= 0 ? pick(rng) % 4 : pick(rng);
  switch (r) {
    case 0: return ControlExpr::symbol(sigma[rng() % sigma.size()]);
    case 1: return ControlExpr::symbol(sigma[rng() % sigma.size()]);
    case 2: return rng() % 4 == 0 ? ControlExpr::empty() : ControlExpr::epsilon();
    case 3: return ControlExpr::symbols(SymbolSet(sigma.begin(), sigma.end()));
    case 4:
    case 5:
    case 6:
      return ControlExpr::concat(random_expr(rng, sigma, budget - 1), random_expr(rng, sigma, budget - 1));
    default: return ControlExpr::star(random_expr(rng, sigma, budget - 1));
  }
}

inline std::vector<Word> words_of(std::initializer_list<const char*> texts) {
  std::vector<Word> out;
  for (auto t : texts) out.push_back(parse_word(t));
  return out;
}

}  // namespace ctcg::testing
