#include <gtest/gtest.h>

#include "ctcg/geffert.hpp"
#include "ctcg/grammar_io.hpp"
#include "ctcg/oracle.hpp"
#include "support.hpp"

using namespace ctcg;
using ctcg::testing::fixture;

namespace {

GeffertGrammar load_q(const char* name) { return GeffertGrammar(load_grammar(fixture(name))); }

Grammar gnf_with(const std::string& extra) {
  return parse_grammar("nonterminals: S, S', A, B\nterminals: a\nstart: S\nrules:\nS -> S'\n" + extra +
                       "A B B B A -> eps\n");
}

std::vector<std::string> labels(const Grammar& g) {
  std::vector<std::string> out;
  for (const auto& p : g.productions()) out.push_back(p.label);
  return out;
}

}  // namespace

TEST(Gnf, TagsEveryForm) {
  auto q = load_q("qa.grammar");
  const auto& tags = q.report().productions;
  ASSERT_EQ(tags.size(), 5u);
  EXPECT_EQ(tags[0].form, GnfForm::generate);
  EXPECT_EQ(tags[1].form, GnfForm::switch_to_s_prime);
  EXPECT_EQ(tags[2].form, GnfForm::extend);
  EXPECT_EQ(tags[3].form, GnfForm::close);
  EXPECT_EQ(tags[4].form, GnfForm::erasing);
  ASSERT_EQ(tags[0].splits.size(), 1u);
  EXPECT_EQ(tags[0].splits[0].u, (std::vector<Word>{parse_word("A B B")}));
}

TEST(Gnf, AmbiguousCloseRuleHasAllSplits) {
  auto r = validate_gnf(gnf_with("S' -> A B B B A\n"));
  ASSERT_TRUE(r.valid);
  EXPECT_EQ(r.productions[1].form, GnfForm::close);
  EXPECT_EQ(r.productions[1].splits.size(), 2u);
}

TEST(Gnf, RejectsBadBlocks) {
  auto r = validate_gnf(load_grammar(fixture("not_gnf.grammar")));
  EXPECT_FALSE(r.valid);
  EXPECT_FALSE(r.productions[0].form.has_value());
  EXPECT_FALSE(r.productions[0].problem.empty());
  EXPECT_THROW(load_q("not_gnf.grammar"), GnfError);
  EXPECT_FALSE(validate_gnf(gnf_with("S' -> A A\n")).valid);
  EXPECT_FALSE(validate_gnf(gnf_with("S' -> S' S'\n")).valid);
}

TEST(Gnf, RequiresErasingRuleAndAlphabet) {
  auto g = parse_grammar("nonterminals: S, S', A, B\nterminals: a\nstart: S\nrules:\nS -> S'\nS' -> eps\n");
  EXPECT_FALSE(validate_gnf(g).valid);
  EXPECT_FALSE(validate_gnf(load_grammar(fixture("ab.grammar"))).valid);
}

TEST(Construction, CoreGrammarShape) {
  auto out = construct_ctcg(load_q("qa.grammar"));
  EXPECT_TRUE(out.core.is_context_free());
  EXPECT_EQ(out.core.nonterminals().size(), 6u);
  EXPECT_EQ(out.core.start(), gnf::S());
  EXPECT_EQ(labels(out.core), (std::vector<std::string>{"p1", "p2", "p3", "act_p4", "pro_A", "pro_B", "era_A",
                                                       "era_B", "era_A_bar", "era_B_bar"}));
  ASSERT_NE(out.core.find("act_p4"), nullptr);
  EXPECT_EQ(out.core.find("act_p4")->rhs, gnf::barred_block());
}

TEST(Construction, Partition) {
  auto out = construct_ctcg(load_q("qa.grammar"));
  EXPECT_EQ(out.partition.gen_prime, (std::vector<std::string>{"p1"}));
  EXPECT_EQ(out.partition.gen, (std::vector<std::string>{"p2", "p3"}));
  EXPECT_EQ(out.partition.act, (std::vector<std::string>{"act_p4"}));
  EXPECT_EQ(out.partition.pro.size(), 2u);
  EXPECT_EQ(out.partition.era.size(), 4u);
}

TEST(Construction, AmbiguousSplitsGetOneActivationEach) {
  auto out = construct_ctcg(GeffertGrammar(gnf_with("S' -> A B B B A\n")));
  EXPECT_EQ(out.partition.act.size(), 2u);
  EXPECT_NE(out.core.find("act_p2_1"), nullptr);
  EXPECT_NE(out.core.find("act_p2_2"), nullptr);
}

TEST(Construction, Controls) {
  auto out = construct_ctcg(load_q("qa.grammar"));
  EXPECT_EQ(format_expr(out.r), "[A B S S']* (S' [A B S S']*)* (A_bar B_bar B_bar B_bar A_bar [A B S S']*)*");
  EXPECT_EQ(format_expr(out.r_hat), "(A* B* S'*)* ((A_bar B_bar B_bar B_bar A_bar)* (A* B* S'*)*)*");
  EXPECT_EQ(op_counts(out.r), (OpCounts{5, 8}));
  EXPECT_FALSE(is_union_free(out.r));
  EXPECT_TRUE(is_union_free(out.r_hat));
}

// The two controls differ as languages (S only occurs in R) even though
// they regulate the same trees.
TEST(Construction, ControlsDifferAsLanguages) {
  auto out = construct_ctcg(load_q("qa.grammar"));
  std::vector<Symbol> sigma{gnf::S(), gnf::S_prime(), gnf::A(), gnf::B(), gnf::A_bar(), gnf::B_bar()};
  auto r = bounded_equiv(out.r, out.r_hat, SymbolSet(sigma.begin(), sigma.end()), 7);
  EXPECT_FALSE(r.equivalent);
  EXPECT_EQ(r.counterexample, Word{gnf::S()});
}

TEST(Construction, ControlGrammar) {
  auto out = construct_ctcg(load_q("qa.grammar"));
  const Grammar& g = out.control_grammar;
  EXPECT_EQ(g.kind(), GrammarKind::right_linear);
  EXPECT_EQ(g.nonterminals(), SymbolSet{gnf::S_hat()});
  EXPECT_EQ(g.productions().size(), 5u);
}

TEST(Construction, Complexity) {
  auto out = construct_ctcg(load_q("q_ab.grammar"));
  auto e = complexity_report(out, ControlChoice::eufreg);
  EXPECT_EQ(e.total, 7u);
  EXPECT_EQ(e.stars, 5u);
  EXPECT_EQ(e.concats, 8u);
  EXPECT_FALSE(e.union_free);
  auto u = complexity_report(out, ControlChoice::union_free);
  EXPECT_EQ(u.total, 7u);
  EXPECT_EQ(u.stars, op_counts(out.r_hat).stars);
  EXPECT_TRUE(u.union_free);
}

TEST(Maps, BarErasingAndUnbarring) {
  SymbolSet t{Symbol::named("a")};
  Word w = parse_word("A_bar B a B_bar");
  EXPECT_EQ(apply_map(bar_erasing_map(t), w), parse_word("B a"));
  EXPECT_EQ(apply_map(unbarring_map(t), w), parse_word("A B a B"));
}

TEST(Liveness, KeepsLiveForms) {
  auto q = load_q("qa.grammar");
  GnfLiveness live(q);
  EXPECT_FALSE(live.dead(parse_word("S")));
  EXPECT_FALSE(live.dead(parse_word("A B B S a")));
  EXPECT_FALSE(live.dead(parse_word("A B B S' a")));
  EXPECT_FALSE(live.dead(parse_word("A B B B A a")));
  EXPECT_FALSE(live.dead(parse_word("a a")));
}

TEST(Liveness, RejectsStuckForms) {
  auto q = load_q("qa.grammar");
  GnfLiveness live(q);
  EXPECT_TRUE(live.dead(parse_word("A B a")));
  EXPECT_TRUE(live.dead(parse_word("A B B S' B B A a")));
}

// Words reachable by the plain closure must survive the filter.
TEST(Liveness, FilterKeepsOracleWords) {
  for (const char* name : {"qa.grammar", "q_ab.grammar", "q_empty.grammar"}) {
    auto q = load_q(name);
    GnfLiveness live(q);
    auto plain = oracle_language(q.grammar(), {3, 14, 14});
    auto filtered = oracle_language(q.grammar(), {3, 14, 14}, [&](const Word& w) { return live.dead(w); });
    EXPECT_TRUE(std::includes(filtered.words.begin(), filtered.words.end(), plain.words.begin(), plain.words.end(),
                              LengthLexLess{}))
        << name;
  }
}

TEST(Liveness, ConclusionFilterDoesNotChangeSamples) {
  for (const char* name : {"qa.grammar", "q_ab.grammar"}) {
    auto q = load_q(name);
    auto h = construct_ctcg(q).ctcg();
    SampleOptions o;
    o.conclusion_dead = conclusion_filter(q);
    auto with = language_sample(h, Mode::conclusive, {3, 24, 24}, o);
    auto without = language_sample(h, Mode::conclusive, {3, 24, 24});
    EXPECT_EQ(with.words, without.words) << name;
  }
}

// Bars placed in the unchecked generative part may pick symbols of
// different blocks, so the regulated grammar can erase a mixed ABBBA.
// Here L(Q) = a* but ab is generated.
TEST(Construction, GenerativeBarsOvergenerate) {
  auto q = load_q("q_overgen.grammar");
  GnfLiveness live(q);
  auto oracle = oracle_language(q.grammar(), {2, 40, 200}, [&](const Word& w) { return live.dead(w); });
  EXPECT_FALSE(oracle.truncated);
  EXPECT_EQ(oracle.words, ctcg::testing::words_of({"eps", "a", "a a"}));
  auto sample = language_sample(construct_ctcg(q).ctcg(), Mode::conclusive, {2, 40, 40});
  EXPECT_TRUE(sample.contains(parse_word("a b")));
}

TEST(Construction, WitnessForSingleLetterIsLong) {
  auto q = load_q("qa.grammar");
  auto out = construct_ctcg(q);
  SampleOptions o;
  o.conclusion_dead = conclusion_filter(q);
  o.target = parse_word("a");
  auto r = language_sample(out.ctcg(), Mode::conclusive, {1, 30, 30}, o);
  const DerivationTree* t = r.witness(parse_word("a"));
  ASSERT_NE(t, nullptr);
  auto an = anatomy(*t, out.core);
  EXPECT_LT(an.m, an.n);
}

TEST(Construction, ConclusiveEqualsLongConclusive) {
  for (const char* name : {"qa.grammar", "q_ab.grammar", "q_empty.grammar"}) {
    auto q = load_q(name);
    auto h = construct_ctcg(q).ctcg();
    SampleOptions o;
    o.conclusion_dead = conclusion_filter(q);
    auto c = language_sample(h, Mode::conclusive, {3, 30, 30}, o);
    auto lc = language_sample(h, Mode::long_conclusive, {3, 30, 30}, o);
    EXPECT_EQ(c.words, lc.words) << name;
  }
}

TEST(Construction, PaddingTwiceAddsNothing) {
  auto h = construct_ctcg(load_q("qa.grammar")).ctcg();
  auto once = pad_start(h);
  EXPECT_EQ(pad_start(once).core().productions(), once.core().productions());
}
