#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ctcg/control_expr.hpp"
#include "ctcg/grammar.hpp"
#include "ctcg/oracle.hpp"
#include "ctcg/regulation.hpp"

namespace ctcg {

namespace gnf {
Symbol S();
Symbol S_prime();
Symbol A();
Symbol B();
Symbol A_bar();
Symbol B_bar();
Symbol S_hat();  // nonterminal of the right-linear control grammar
Word erasable_block();  // A B B B A
Word barred_block();    // A_bar B_bar B_bar B_bar A_bar
}  // namespace gnf

// (i) S -> uSa, (ii) S -> S', (iii) S' -> uS'v, (iv) S' -> uv, and the
// erasing rule ABBBA -> eps.
enum class GnfForm { generate, switch_to_s_prime, extend, close, erasing };

std::string_view form_tag(GnfForm form);

// u as blocks from {AB, ABB}, v as blocks from {BA, BBA}.
struct BlockSplit {
  std::vector<Word> u;
  std::vector<Word> v;
};

struct ProductionTag {
  std::string label;
  std::optional<GnfForm> form;
  std::vector<BlockSplit> splits;  // several only for ambiguous (iv) rules
  std::string problem;             // set when form is empty
};

struct GnfReport {
  bool valid = true;
  std::vector<std::string> problems;  // grammar level
  std::vector<ProductionTag> productions;
};

GnfReport validate_gnf(const Grammar& g);

class GnfError : public std::runtime_error {
 public:
  explicit GnfError(GnfReport report);
  const GnfReport& report() const noexcept { return report_; }

 private:
  GnfReport report_;
};

class GeffertGrammar {
 public:
  explicit GeffertGrammar(Grammar g);  // throws GnfError

  const Grammar& grammar() const noexcept { return grammar_; }
  const GnfReport& report() const noexcept { return report_; }

 private:
  Grammar grammar_;
  GnfReport report_;
};

enum class ControlChoice { eufreg, union_free };

std::string_view to_string(ControlChoice c);

struct ProductionPartition {
  std::vector<std::string> gen;        // rhs contains S'
  std::vector<std::string> gen_prime;  // form (i) rules, kept unregulated
  std::vector<std::string> act;
  std::vector<std::string> pro;
  std::vector<std::string> era;
};

struct ConstructionOutput {
  Grammar core;
  ProductionPartition partition;
  ControlExpr r;                  // EUFREG control
  ControlExpr r_hat;              // union-free control
  Grammar control_grammar;        // right-linear, generates r_hat

  Ctcg ctcg(ControlChoice choice = ControlChoice::eufreg) const;
};

ControlExpr eufreg_control();
ControlExpr union_free_control();

ConstructionOutput construct_ctcg(const GeffertGrammar& q);

// Needs the six construction symbols in n_g.
Grammar build_control_rlg(const SymbolSet& n_g);

struct ComplexityReport {
  std::size_t core_nonterminals = 0;
  std::size_t control_nonterminals = 0;
  std::size_t total = 0;
  std::size_t stars = 0;
  std::size_t concats = 0;
  bool union_free = false;
};

ComplexityReport complexity_report(const ConstructionOutput& out, ControlChoice choice);

// h erases the barred symbols, h' removes the bars.
SymbolMap bar_erasing_map(const SymbolSet& terminals);
SymbolMap unbarring_map(const SymbolSet& terminals);

// Sound test for sentential forms of a GNF grammar that derive no terminal
// word. Forms still holding S are never rejected.
class GnfLiveness {
 public:
  explicit GnfLiveness(const GeffertGrammar& q);

  bool dead(const Word& form) const;

 private:
  bool dead_without_s_prime(const Word& nonterminals) const;

  struct Rule {
    int block_surplus;  // u blocks minus v blocks
    int potential;      // change of 3#A - 2#B
  };
  std::vector<Rule> s_prime_rules_;
  bool can_close_ = false;
  SymbolSet terminals_;
  mutable std::unordered_map<Word, bool, WordHash> erasable_memo_;
};

// Liveness filter for conclusion forms of a constructed CTCG: maps the form
// through h and asks GnfLiveness.
DeadFormFilter conclusion_filter(const GeffertGrammar& q);

}  // namespace ctcg
