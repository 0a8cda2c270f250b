#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ctcg/grammar.hpp"

namespace ctcg {

struct OracleBounds {
  std::size_t max_len = 0;
  std::size_t max_form_len = 0;
  std::size_t max_steps = 0;
};

// Returns true when a sentential form provably derives no terminal word.
// Used to discard forms without counting them as truncation, so it must
// be sound.
using DeadFormFilter = std::function<bool(const Word&)>;

struct OracleResult {
  std::vector<Word> words;  // length-lexicographic
  bool truncated = false;   // false: the bounded frontier was exhausted
  std::size_t forms_explored = 0;

  bool contains(const Word& w) const;
};

// Breadth-first closure of derive_step from the start symbol with a global
// visited set. Words longer than max_len are dropped. When no production
// has a terminal on its left-hand side the terminal count never shrinks,
// so forms with more than max_len terminals are dropped silently as well.
// Every other discarded form sets `truncated`.
OracleResult oracle_language(const Grammar& g, const OracleBounds& bounds,
                             const DeadFormFilter& dead = {});

}  // namespace ctcg
