#include "ctcg/geffert.hpp"

#include <algorithm>
#include <memory>

namespace ctcg {

namespace gnf {
Symbol S() { return Symbol::named("S"); }
Symbol S_prime() { return Symbol::named("S'"); }
Symbol A() { return Symbol::named("A"); }
Symbol B() { return Symbol::named("B"); }
Symbol A_bar() { return Symbol::named("A_bar"); }
Symbol B_bar() { return Symbol::named("B_bar"); }
Symbol S_hat() { return Symbol::named("S_hat"); }
Word erasable_block() { return {A(), B(), B(), B(), A()}; }
Word barred_block() { return {A_bar(), B_bar(), B_bar(), B_bar(), A_bar()}; }
}  // namespace gnf

std::string_view form_tag(GnfForm form) {
  switch (form) {
    case GnfForm::generate: return "(i)";
    case GnfForm::switch_to_s_prime: return "(ii)";
    case GnfForm::extend: return "(iii)";
    case GnfForm::close: return "(iv)";
    case GnfForm::erasing: return "erasing";
  }
  return "?";
}

std::string_view to_string(ControlChoice c) {
  return c == ControlChoice::eufreg ? "eufreg" : "union-free";
}

namespace {

// u blocks start with A, so cutting before every A is the only candidate.
std::optional<std::vector<Word>> split_u(const Word& w) {
  std::vector<Word> blocks;
  for (Symbol s : w) {
    if (s == gnf::A()) {
      blocks.push_back({s});
    } else if (s == gnf::B() && !blocks.empty()) {
      blocks.back().push_back(s);
    } else {
      return std::nullopt;
    }
  }
  for (const auto& b : blocks)
    if (b.size() != 2 && b.size() != 3) return std::nullopt;
  return blocks;
}

// v blocks end with A: cut after every A.
std::optional<std::vector<Word>> split_v(const Word& w) {
  std::vector<Word> blocks{{}};
  for (Symbol s : w) {
    if (s != gnf::A() && s != gnf::B()) return std::nullopt;
    blocks.back().push_back(s);
    if (s == gnf::A()) blocks.emplace_back();
  }
  if (!blocks.back().empty()) return std::nullopt;
  blocks.pop_back();
  for (const auto& b : blocks)
    if (b.size() != 2 && b.size() != 3) return std::nullopt;
  return blocks;
}

std::optional<BlockSplit> split_uv(const Word& u, const Word& v) {
  auto bu = split_u(u);
  auto bv = split_v(v);
  if (!bu || !bv) return std::nullopt;
  return BlockSplit{std::move(*bu), std::move(*bv)};
}

Word slice(const Word& w, std::size_t b, std::size_t e) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(b), w.begin() + static_cast<std::ptrdiff_t>(e));
}

ProductionTag tag_production(const Grammar& g, const Production& p) {
  ProductionTag tag{p.label, std::nullopt, {}, {}};
  const Word& r = p.rhs;
  if (p.lhs == gnf::erasable_block()) {
    if (r.empty()) {
      tag.form = GnfForm::erasing;
    } else {
      tag.problem = "ABBBA must rewrite to eps";
    }
    return tag;
  }
  if (p.lhs == Word{gnf::S()}) {
    if (r == Word{gnf::S_prime()}) {
      tag.form = GnfForm::switch_to_s_prime;
      return tag;
    }
    if (r.size() >= 2 && g.is_terminal(r.back()) && r[r.size() - 2] == gnf::S()) {
      if (auto s = split_uv(slice(r, 0, r.size() - 2), {})) {
        tag.form = GnfForm::generate;
        tag.splits.push_back(std::move(*s));
        return tag;
      }
    }
    tag.problem = "S rule is neither S -> uSa nor S -> S'";
    return tag;
  }
  if (p.lhs == Word{gnf::S_prime()}) {
    auto k = occur(r, gnf::S_prime());
    if (k == 1 && occur(r, gnf::S()) == 0) {
      auto at = static_cast<std::size_t>(std::find(r.begin(), r.end(), gnf::S_prime()) - r.begin());
      if (auto s = split_uv(slice(r, 0, at), slice(r, at + 1, r.size()))) {
        tag.form = GnfForm::extend;
        tag.splits.push_back(std::move(*s));
        return tag;
      }
    }
    if (k == 0) {
      for (std::size_t cut = 0; cut <= r.size(); ++cut)
        if (auto s = split_uv(slice(r, 0, cut), slice(r, cut, r.size())))
          tag.splits.push_back(std::move(*s));
      if (!tag.splits.empty()) {
        tag.form = GnfForm::close;
        return tag;
      }
    }
    tag.problem = "S' rule is neither S' -> uS'v nor S' -> uv";
    return tag;
  }
  tag.problem = "left-hand side must be S, S' or ABBBA";
  return tag;
}

Word with_barred_center(const BlockSplit& s) {
  Word out;
  for (const auto& b : s.u) out.insert(out.end(), b.begin(), b.end());
  auto center = gnf::barred_block();
  out.insert(out.end(), center.begin(), center.end());
  for (const auto& b : s.v) out.insert(out.end(), b.begin(), b.end());
  return out;
}

SymbolSet construction_nonterminals() {
  return {gnf::S(), gnf::S_prime(), gnf::A(), gnf::B(), gnf::A_bar(), gnf::B_bar()};
}

int potential(const Word& w) {
  int phi = 0;
  for (Symbol s : w) {
    if (s == gnf::A()) phi += 3;
    if (s == gnf::B()) phi -= 2;
  }
  return phi;
}

}  // namespace

GnfReport validate_gnf(const Grammar& g) {
  GnfReport report;
  if (g.nonterminals() != SymbolSet{gnf::S(), gnf::S_prime(), gnf::A(), gnf::B()})
    report.problems.push_back("nonterminals must be exactly S, S', A, B");
  if (g.start() != gnf::S()) report.problems.push_back("start symbol must be S");
  for (Symbol s : {gnf::A_bar(), gnf::B_bar(), gnf::S_hat()})
    if (g.is_terminal(s)) report.problems.push_back("terminal name reserved by the construction: " + s.name());

  bool erasing = false;
  for (const auto& p : g.productions()) {
    auto tag = tag_production(g, p);
    erasing = erasing || tag.form == GnfForm::erasing;
    if (!tag.form) report.valid = false;
    report.productions.push_back(std::move(tag));
  }
  if (!erasing) report.problems.push_back("missing production A B B B A -> eps");
  if (!report.problems.empty()) report.valid = false;
  return report;
}

namespace {

std::string describe(const GnfReport& r) {
  std::string out = "grammar is not in Geffert normal form";
  for (const auto& p : r.problems) out += "; " + p;
  for (const auto& t : r.productions)
    if (!t.form) out += "; " + t.label + ": " + t.problem;
  return out;
}

}  // namespace

GnfError::GnfError(GnfReport report) : std::runtime_error(describe(report)), report_(std::move(report)) {}

GeffertGrammar::GeffertGrammar(Grammar g) : grammar_(std::move(g)), report_(validate_gnf(grammar_)) {
  if (!report_.valid) throw GnfError(report_);
}

ControlExpr eufreg_control() {
  auto nq = ControlExpr::star(ControlExpr::symbols({gnf::S(), gnf::S_prime(), gnf::A(), gnf::B()}));
  auto r2 = ControlExpr::sequence({ControlExpr::symbol(gnf::S_prime()), nq});
  std::vector<ControlExpr> r3;
  for (Symbol s : gnf::barred_block()) r3.push_back(ControlExpr::symbol(s));
  r3.push_back(nq);
  return ControlExpr::sequence(
      {nq, ControlExpr::star(r2), ControlExpr::star(ControlExpr::sequence(r3))});
}

ControlExpr union_free_control() {
  auto abs = [] {
    return ControlExpr::star(ControlExpr::sequence({ControlExpr::star(ControlExpr::symbol(gnf::A())),
                                                    ControlExpr::star(ControlExpr::symbol(gnf::B())),
                                                    ControlExpr::star(ControlExpr::symbol(gnf::S_prime()))}));
  };
  auto block = ControlExpr::star(ControlExpr::word(gnf::barred_block()));
  return ControlExpr::sequence({abs(), ControlExpr::star(ControlExpr::sequence({block, abs()}))});
}

Ctcg ConstructionOutput::ctcg(ControlChoice choice) const {
  return Ctcg(core, choice == ControlChoice::eufreg ? r : r_hat);
}

ConstructionOutput construct_ctcg(const GeffertGrammar& q) {
  const Grammar& g = q.grammar();
  ProductionPartition part;
  std::vector<Production> ps;

  for (std::size_t i = 0; i < g.productions().size(); ++i) {
    const auto& p = g.productions()[i];
    const auto& tag = q.report().productions[i];
    switch (*tag.form) {
      case GnfForm::generate:
        part.gen_prime.push_back(p.label);
        ps.push_back(p);
        break;
      case GnfForm::switch_to_s_prime:
      case GnfForm::extend:
        part.gen.push_back(p.label);
        ps.push_back(p);
        break;
      case GnfForm::close:
        for (std::size_t k = 0; k < tag.splits.size(); ++k) {
          std::string label = "act_" + p.label;
          if (tag.splits.size() > 1) label += "_" + std::to_string(k + 1);
          part.act.push_back(label);
          ps.push_back({label, {gnf::S_prime()}, with_barred_center(tag.splits[k])});
        }
        break;
      case GnfForm::erasing:
        break;
    }
  }
  auto add = [&](std::vector<std::string>& group, std::string label, Word lhs, Word rhs) {
    group.push_back(label);
    ps.push_back({std::move(label), std::move(lhs), std::move(rhs)});
  };
  add(part.pro, "pro_A", {gnf::A()}, {gnf::A()});
  add(part.pro, "pro_B", {gnf::B()}, {gnf::B()});
  add(part.era, "era_A", {gnf::A()}, {gnf::A_bar()});
  add(part.era, "era_B", {gnf::B()}, {gnf::B_bar()});
  add(part.era, "era_A_bar", {gnf::A_bar()}, {});
  add(part.era, "era_B_bar", {gnf::B_bar()}, {});

  auto n_g = construction_nonterminals();
  Grammar core(n_g, g.terminals(), std::move(ps), gnf::S());
  return ConstructionOutput{std::move(core), std::move(part), eufreg_control(), union_free_control(),
                            build_control_rlg(n_g)};
}

Grammar build_control_rlg(const SymbolSet& n_g) {
  for (Symbol s : construction_nonterminals())
    if (!n_g.contains(s)) throw std::invalid_argument("missing construction symbol " + s.name());
  Symbol hat = gnf::S_hat();
  std::vector<Production> ps;
  for (Symbol x : {gnf::A(), gnf::B(), gnf::S_prime()})
    ps.push_back({"hat_" + x.name(), {hat}, {x, hat}});
  Word block = gnf::barred_block();
  block.push_back(hat);
  ps.push_back({"hat_block", {hat}, block});
  ps.push_back({"hat_end", {hat}, {}});
  return Grammar({hat}, n_g, std::move(ps), hat);
}

ComplexityReport complexity_report(const ConstructionOutput& out, ControlChoice choice) {
  const ControlExpr& e = choice == ControlChoice::eufreg ? out.r : out.r_hat;
  ComplexityReport r;
  r.core_nonterminals = out.core.nonterminals().size();
  r.control_nonterminals = out.control_grammar.nonterminals().size();
  r.total = r.core_nonterminals + r.control_nonterminals;
  auto counts = op_counts(e);
  r.stars = counts.stars;
  r.concats = counts.concats;
  r.union_free = is_union_free(e);
  return r;
}

SymbolMap bar_erasing_map(const SymbolSet& terminals) {
  SymbolMap h;
  h.identity_on(terminals).identity_on({gnf::S(), gnf::S_prime(), gnf::A(), gnf::B()});
  h.set(gnf::A_bar(), {}).set(gnf::B_bar(), {});
  return h;
}

SymbolMap unbarring_map(const SymbolSet& terminals) {
  SymbolMap h;
  h.identity_on(terminals).identity_on({gnf::S(), gnf::S_prime(), gnf::A(), gnf::B()});
  h.set(gnf::A_bar(), {gnf::A()}).set(gnf::B_bar(), {gnf::B()});
  return h;
}

GnfLiveness::GnfLiveness(const GeffertGrammar& q) : terminals_(q.grammar().terminals()) {
  const auto& ps = q.grammar().productions();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const auto& tag = q.report().productions[i];
    if (tag.form != GnfForm::extend && tag.form != GnfForm::close) continue;
    can_close_ = can_close_ || tag.form == GnfForm::close;
    for (const auto& s : tag.splits)
      s_prime_rules_.push_back({static_cast<int>(s.u.size()) - static_cast<int>(s.v.size()),
                                potential(ps[i].rhs)});
  }
}

bool GnfLiveness::dead(const Word& form) const {
  if (std::find(form.begin(), form.end(), gnf::S()) != form.end()) return false;
  // only forms of the shape (nonterminals)(terminals) are judged
  auto first_terminal = std::find_if(form.begin(), form.end(), [&](Symbol s) { return terminals_.contains(s); });
  if (std::any_of(first_terminal, form.end(), [&](Symbol s) { return !terminals_.contains(s); })) return false;
  Word nts(form.begin(), first_terminal);

  auto primes = occur(nts, gnf::S_prime());
  if (primes == 0) return dead_without_s_prime(nts);
  if (primes > 1) return false;
  if (!can_close_) return true;

  auto at = static_cast<std::size_t>(std::find(nts.begin(), nts.end(), gnf::S_prime()) - nts.begin());
  auto outer_u = split_u(slice(nts, 0, at));
  auto outer_v = split_v(slice(nts, at + 1, nts.size()));
  if (outer_u && outer_v) {
    // While S' is present nothing can be erased, and afterwards erasure
    // proceeds from the U|V junction outwards, so outer blocks pair up:
    // ABB with BA and AB with BBA.
    const auto& u = *outer_u;
    const auto& v = *outer_v;
    for (std::size_t i = 0; i < std::min(u.size(), v.size()); ++i)
      if (u[i].size() + v[v.size() - 1 - i].size() != 5) return true;
    auto [lo, hi] = std::minmax_element(s_prime_rules_.begin(), s_prime_rules_.end(),
                                        [](const Rule& a, const Rule& b) { return a.block_surplus < b.block_surplus; });
    if (hi->block_surplus <= 0 && v.size() > u.size()) return true;
    if (lo->block_surplus >= 0 && u.size() > v.size()) return true;
  }
  // ABBBA -> eps keeps 3#A - 2#B, so only S' rules can repair it
  int phi = potential(nts);
  bool up = std::all_of(s_prime_rules_.begin(), s_prime_rules_.end(), [](const Rule& r) { return r.potential >= 0; });
  bool down = std::all_of(s_prime_rules_.begin(), s_prime_rules_.end(), [](const Rule& r) { return r.potential <= 0; });
  return (up && phi > 0) || (down && phi < 0);
}

bool GnfLiveness::dead_without_s_prime(const Word& nts) const {
  if (nts.empty()) return false;
  if (potential(nts) != 0) return true;
  if (auto it = erasable_memo_.find(nts); it != erasable_memo_.end()) return !it->second;
  const Word block = gnf::erasable_block();
  bool erasable = false;
  for (auto it = std::search(nts.begin(), nts.end(), block.begin(), block.end()); it != nts.end() && !erasable;
       it = std::search(it + 1, nts.end(), block.begin(), block.end())) {
    Word rest(nts.begin(), it);
    rest.insert(rest.end(), it + 5, nts.end());
    erasable = !dead_without_s_prime(rest);
  }
  erasable_memo_.emplace(nts, erasable);
  return !erasable;
}

DeadFormFilter conclusion_filter(const GeffertGrammar& q) {
  auto live = std::make_shared<GnfLiveness>(q);
  auto h = std::make_shared<SymbolMap>(bar_erasing_map(q.grammar().terminals()));
  return [live, h](const Word& form) { return live->dead(apply_map(*h, form)); };
}

}  // namespace ctcg
