#include <gtest/gtest.h>

#include "ctcg/derivation_tree.hpp"
#include "ctcg/grammar_io.hpp"
#include "support.hpp"

using namespace ctcg;
using ctcg::testing::fixture;

namespace {

Grammar ab_grammar() { return load_grammar(fixture("ab.grammar")); }

DerivationTree aabb_tree() { return parse_tree(read_text_file(fixture("aabb_short.tree"))); }

}  // namespace

TEST(DerivationTree, BracketRoundTrip) {
  auto t = aabb_tree();
  EXPECT_EQ(parse_tree(to_bracket(t)), t);
  EXPECT_EQ(t.size(), 15u);
  EXPECT_EQ(parse_tree(" S [ A [ a ]  B[eps] ] "), parse_tree("S[A[a] B[eps]]"));
  EXPECT_THROW(parse_tree("S[A[a]"), ParseError);
}

TEST(DerivationTree, LevelWordsSkipEpsilonLeaves) {
  auto t = aabb_tree();
  EXPECT_EQ(depth(t), 5u);
  EXPECT_EQ(level_word(t, 0), parse_word("S"));
  EXPECT_EQ(level_word(t, 1), parse_word("A B"));
  EXPECT_EQ(level_word(t, 2), parse_word("A A b B"));
  EXPECT_EQ(level_word(t, 3), parse_word("a a b B"));
  EXPECT_EQ(level_word(t, 4), parse_word("B C"));
  EXPECT_EQ(level_word(t, 5), Word{});
  EXPECT_THROW(level_word(t, 6), std::out_of_range);
  EXPECT_EQ(frontier(t), parse_word("a a b b"));
}

TEST(DerivationTree, ValidatesAgainstGrammar) {
  EXPECT_TRUE(validate_tree(ab_grammar(), aabb_tree()).valid);
  auto bad = validate_tree(ab_grammar(), parse_tree("S[A[b] B[eps]]"));
  EXPECT_FALSE(bad.valid);
  EXPECT_TRUE(bad.node.has_value());
  EXPECT_TRUE(validate_tree(ab_grammar(), parse_tree("A[a]")).valid);
  EXPECT_FALSE(validate_tree(ab_grammar(), parse_tree("a[A]")).valid);
  EXPECT_THROW(validate_tree(load_grammar(fixture("qa.grammar")), parse_tree("S[S'[eps]]")), std::invalid_argument);
}

TEST(DerivationTree, AnatomyShort) {
  auto a = anatomy(aabb_tree(), ab_grammar());
  EXPECT_EQ(a, (TreeAnatomy{3, 1, ConclusionKind::short_conclusion}));
}

TEST(DerivationTree, AnatomyLong) {
  // a sits on level 2, the B C chain below it runs to depth 6
  auto t = parse_tree("S[A[a] B[B[B[B[B[eps] C[eps]] C[eps]] C[eps]] C[eps]]]");
  EXPECT_EQ(anatomy(t, ab_grammar()), (TreeAnatomy{2, 3, ConclusionKind::long_conclusion}));
}

TEST(DerivationTree, AnatomyWithoutConclusion) {
  auto t = parse_tree("S[A[a] B[b B[eps]]]");
  // deepest terminal sits on level 2, the eps leaf on level 3
  EXPECT_EQ(anatomy(t, ab_grammar()), (TreeAnatomy{2, 0, ConclusionKind::short_conclusion}));
  auto bare = parse_tree("X[a]");
  EXPECT_EQ(anatomy(bare, SymbolSet{Symbol::named("a")}).kind, ConclusionKind::no_conclusion);
}

TEST(DerivationTree, AnatomyOfTerminalFreeTree) {
  auto t = parse_tree("S[B[eps]]");
  EXPECT_EQ(anatomy(t, ab_grammar()), (TreeAnatomy{0, 1, ConclusionKind::long_conclusion}));
}

TEST(DerivationTree, DotOverlay) {
  auto dot = to_dot(aabb_tree(), ab_grammar(), true);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("fillcolor=lightgrey"), std::string::npos);
  EXPECT_NE(dot.find("color=red"), std::string::npos);
  EXPECT_NE(dot.find("\xce\xb5"), std::string::npos);
  auto plain = to_dot(aabb_tree(), ab_grammar(), false);
  EXPECT_EQ(plain.find("lightgrey"), std::string::npos);
}

TEST(DerivationTree, DotCounts) {
  auto dot = to_dot(aabb_tree(), ab_grammar(), true);
  auto count = [&](std::string_view needle) {
    std::size_t k = 0;
    for (auto p = dot.find(needle); p != std::string::npos; p = dot.find(needle, p + 1)) ++k;
    return k;
  };
  EXPECT_EQ(count("label="), 15u);
  EXPECT_EQ(count("->"), 14u);
  EXPECT_EQ(count("lightgrey"), 4u);
  auto single = to_dot(parse_tree("S"), ab_grammar(), true);
  EXPECT_EQ(single.find("->"), std::string::npos);
  EXPECT_NE(single.find("label="), std::string::npos);
}

TEST(DerivationTree, LevelWordsKeepAllLabels) {
  auto t = parse_tree("S[A[A[a] A[a]] B[b B[B[b B[eps]] C[eps]]]]");
  Word all;
  for (std::size_t i = 0; i <= depth(t); ++i) {
    auto w = level_word(t, i);
    all.insert(all.end(), w.begin(), w.end());
  }
  std::size_t labeled = 0;
  for (std::size_t id = 0; id < t.size(); ++id) labeled += t.node(static_cast<DerivationTree::NodeId>(id)).label ? 1 : 0;
  EXPECT_EQ(all.size(), labeled);
  auto a = anatomy(t, ab_grammar());
  EXPECT_EQ(a.m + a.n + 1, depth(t));
  for (std::size_t i = a.m + 1; i <= depth(t); ++i)
    for (Symbol s : level_word(t, i)) EXPECT_FALSE(ab_grammar().is_terminal(s));
}

TEST(DerivationTree, ExpandAddsEpsilonLeaf) {
  DerivationTree t(Symbol::named("B"));
  t.expand(t.root(), {});
  ASSERT_EQ(t.size(), 2u);
  EXPECT_FALSE(t.node(1).label.has_value());
}
