#include "ctcg/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace ctcg {

bool OracleResult::contains(const Word& w) const {
  return std::binary_search(words.begin(), words.end(), w, LengthLexLess{});
}

OracleResult oracle_language(const Grammar& g, const OracleBounds& bounds,
                             const DeadFormFilter& dead) {
  if (bounds.max_form_len == 0 || bounds.max_steps == 0)
    throw std::invalid_argument("oracle bounds must be positive");

  bool monotone_terminals = std::none_of(
      g.productions().begin(), g.productions().end(), [&](const Production& p) {
        return std::any_of(p.lhs.begin(), p.lhs.end(), [&](Symbol s) { return g.is_terminal(s); });
      });

  OracleResult result;
  std::unordered_set<Word, WordHash> visited;
  std::vector<Word> frontier{Word{g.start()}};
  visited.insert(frontier.front());

  for (std::size_t step = 0; !frontier.empty(); ++step) {
    std::vector<Word> next;
    for (const Word& form : frontier) {
      ++result.forms_explored;
      if (g.is_terminal_word(form)) {
        if (form.size() <= bounds.max_len) result.words.push_back(form);
        continue;
      }
      if (dead && dead(form)) continue;
      auto successors = derive_step(g, form);
      if (step == bounds.max_steps) {
        if (!successors.empty()) result.truncated = true;
        continue;
      }
      for (auto& s : successors) {
        if (monotone_terminals &&
            static_cast<std::size_t>(std::count_if(s.result.begin(), s.result.end(), [&](Symbol x) {
              return g.is_terminal(x);
            })) > bounds.max_len)
          continue;
        if (s.result.size() > bounds.max_form_len) {
          if (!(dead && dead(s.result))) result.truncated = true;
          continue;
        }
        if (visited.insert(s.result).second) next.push_back(std::move(s.result));
      }
    }
    frontier = std::move(next);
  }
  std::sort(result.words.begin(), result.words.end(), LengthLexLess{});
  return result;
}

}  // namespace ctcg
