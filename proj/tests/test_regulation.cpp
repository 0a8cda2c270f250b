#include <gtest/gtest.h>

#include "ctcg/derivation_tree.hpp"
#include "ctcg/grammar_io.hpp"
#include "ctcg/oracle.hpp"
#include "ctcg/regulation.hpp"
#include "support.hpp"

using namespace ctcg;
using ctcg::testing::fixture;

namespace {

Grammar ab_grammar() { return load_grammar(fixture("ab.grammar")); }

Ctcg powers() { return Ctcg(ab_grammar(), load_control(fixture("powers.ctl"))); }
Ctcg tail() { return Ctcg(ab_grammar(), load_control(fixture("tail.ctl"))); }

constexpr Mode all_modes[] = {Mode::tcg_full, Mode::conclusive, Mode::short_conclusive, Mode::long_conclusive};

void expect_same_sample(const Ctcg& h, Mode mode, SampleBounds bounds) {
  auto naive = sample_by_enumeration(h, mode, bounds);
  auto fast = language_sample(h, mode, bounds);
  EXPECT_EQ(fast.words, naive.words) << to_string(mode);
  for (std::size_t i = 0; i < fast.words.size(); ++i) {
    const auto& t = fast.witnesses[i];
    EXPECT_EQ(frontier(t), fast.words[i]);
    EXPECT_TRUE(accepts_tree(h, t, mode).accepted) << to_bracket(t);
    EXPECT_LE(depth(t), bounds.max_depth);
  }
}

}  // namespace

TEST(Ctcg, RejectsNonContextFreeCore) {
  EXPECT_THROW(Ctcg(load_grammar(fixture("qa.grammar")), parse_expr("S*")), GrammarError);
}

TEST(Ctcg, RejectsForeignControlSymbols) {
  EXPECT_THROW(Ctcg(ab_grammar(), parse_expr("Z*")), GrammarError);
}

TEST(Mode, Names) {
  EXPECT_EQ(parse_mode("sc"), Mode::short_conclusive);
  EXPECT_EQ(parse_mode("long-conclusive"), Mode::long_conclusive);
  EXPECT_FALSE(parse_mode("x").has_value());
  for (Mode m : all_modes) EXPECT_EQ(parse_mode(to_string(m)), m);
}

TEST(Acceptance, ShortAabbTreeInEveryApplicableMode) {
  auto t = parse_tree(read_text_file(fixture("aabb_short.tree")));
  EXPECT_TRUE(accepts_tree(powers(), t, Mode::tcg_full).accepted);
  EXPECT_TRUE(accepts_tree(tail(), t, Mode::conclusive).accepted);
  EXPECT_TRUE(accepts_tree(tail(), t, Mode::short_conclusive).accepted);
  auto lc = accepts_tree(tail(), t, Mode::long_conclusive);
  EXPECT_FALSE(lc.accepted);
  EXPECT_FALSE(lc.failing_level.has_value());
}

TEST(Acceptance, ReportsFailingLevel) {
  // level 3 "a A A" mixes a with A, which no alternative allows
  auto t = parse_tree("S[A[A[a] A[A[a] A[a]]] B[eps]]");
  auto r = accepts_tree(powers(), t, Mode::tcg_full);
  EXPECT_FALSE(r.accepted);
  EXPECT_EQ(r.failing_level, 3u);
}

TEST(Acceptance, ConclusiveModeOnlyAsksBelowTheDeepestTerminal) {
  auto t = parse_tree(read_text_file(fixture("aabb_short.tree")));
  std::vector<Word> asked;
  LevelPredicate spy = [&](const Word& w) {
    asked.push_back(w);
    return true;
  };
  accepts_levels(ab_grammar(), t, Mode::conclusive, spy);
  EXPECT_EQ(asked, (std::vector<Word>{parse_word("B C"), Word{}}));
  asked.clear();
  accepts_levels(ab_grammar(), t, Mode::tcg_full, spy);
  EXPECT_EQ(asked.size(), 5u);
}

TEST(Acceptance, RejectsIncompleteTrees) {
  EXPECT_THROW(accepts_tree(powers(), parse_tree("S[A B]"), Mode::tcg_full), std::invalid_argument);
  EXPECT_THROW(accepts_tree(powers(), parse_tree("S[A[b] B[eps]]"), Mode::tcg_full), std::invalid_argument);
}

TEST(Enumeration, CountsSmallTrees) {
  Grammar g = parse_grammar("nonterminals: S\nterminals: a\nstart: S\nrules:\nS -> S S\nS -> a\n");
  auto e = enumerate_trees(g, 2, 10);
  // depth 1: S[a]; depth 2: S[S[a] S[a]]
  ASSERT_EQ(e.trees.size(), 2u);
  EXPECT_TRUE(e.truncated);
}

TEST(Search, AgreesWithEnumerationOnSmallControls) {
  for (Mode m : all_modes) {
    expect_same_sample(powers(), m, {5, 6, 7});
    expect_same_sample(tail(), m, {5, 6, 7});
  }
}

TEST(Search, AgreesWithEnumerationOnPermissiveControl) {
  Ctcg h(ab_grammar(), parse_expr("[S A B C a b]*"));
  for (Mode m : all_modes) expect_same_sample(h, m, {5, 6, 7});
}

TEST(Search, AgreesWithEnumerationOnRandomControls) {
  std::mt19937 rng(3);
  std::vector<Symbol> sigma;
  for (const char* n : {"S", "A", "B", "C", "a", "b"}) sigma.push_back(Symbol::named(n));
  for (int i = 0; i < 25; ++i) {
    Ctcg h(ab_grammar(), ctcg::testing::random_expr(rng, sigma, 5));
    for (Mode m : all_modes) expect_same_sample(h, m, {4, 6, 6});
  }
}

TEST(Search, ConclusiveModesSplit) {
  SampleBounds b{6, 12, 12};
  auto c = language_sample(tail(), Mode::conclusive, b);
  auto sc = language_sample(tail(), Mode::short_conclusive, b);
  auto lc = language_sample(tail(), Mode::long_conclusive, b);
  std::vector<Word> both;
  std::set_union(sc.words.begin(), sc.words.end(), lc.words.begin(), lc.words.end(), std::back_inserter(both),
                 LengthLexLess{});
  EXPECT_EQ(both, c.words);
  EXPECT_TRUE(std::includes(c.words.begin(), c.words.end(), sc.words.begin(), sc.words.end(), LengthLexLess{}));
}

TEST(Search, LongerBoundsOnlyAddWords) {
  auto small = language_sample(powers(), Mode::tcg_full, {5, 10, 10});
  auto large = language_sample(powers(), Mode::tcg_full, {7, 20, 20});
  EXPECT_TRUE(std::includes(large.words.begin(), large.words.end(), small.words.begin(), small.words.end(),
                            LengthLexLess{}));
}

TEST(Search, Deterministic) {
  auto a = language_sample(tail(), Mode::conclusive, {5, 10, 10});
  auto b = language_sample(tail(), Mode::conclusive, {5, 10, 10});
  EXPECT_EQ(a.words, b.words);
  EXPECT_EQ(a.witnesses, b.witnesses);
  EXPECT_EQ(a.states, b.states);
}

TEST(Search, ReportsTruncation) {
  EXPECT_TRUE(language_sample(powers(), Mode::tcg_full, {9, 3, 30}).truncated);
  EXPECT_THROW(language_sample(powers(), Mode::tcg_full, {9, 0, 30}), std::invalid_argument);
}

TEST(Search, TargetFindsFirstWitness) {
  SampleOptions o;
  o.target = parse_word("a a b b");
  auto r = language_sample(powers(), Mode::tcg_full, {4, 20, 20}, o);
  const DerivationTree* t = r.witness(*o.target);
  ASSERT_NE(t, nullptr);
  EXPECT_TRUE(accepts_tree(powers(), *t, Mode::tcg_full).accepted);
}

TEST(Padding, AddsStartLoop) {
  Ctcg p = pad_start(tail());
  ASSERT_NE(p.core().find("pad"), nullptr);
  EXPECT_EQ(p.core().productions().size(), 8u);
  // the loop turns a long conclusion into a short one
  auto lc = language_sample(tail(), Mode::long_conclusive, {3, 12, 12});
  auto sc = language_sample(p, Mode::short_conclusive, {3, 16, 12});
  EXPECT_TRUE(std::includes(sc.words.begin(), sc.words.end(), lc.words.begin(), lc.words.end(), LengthLexLess{}));
}

TEST(Enumeration, FrontiersAreDerivable) {
  Grammar g = ab_grammar();
  auto derived = oracle_language(g, {4, 8, 12});
  auto trees = enumerate_trees(g, 5, 6);
  ASSERT_FALSE(trees.trees.empty());
  for (const auto& t : trees.trees) {
    Word w = frontier(t);
    if (w.size() <= 4) EXPECT_TRUE(derived.contains(w)) << to_bracket(t);
  }
}
