#include <starfac/tree_codec.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"

namespace sf = starfac;

namespace {

sf::HookAssignment hook(std::vector<int> f, int c) { return sf::HookAssignment{std::move(f), c}; }

std::string forward_text(const sf::Permutation& pi, int k, const sf::HookAssignment& h) {
  return sf::serialize_tree(sf::tree_forward(pi, k, h));
}

}  // namespace

TEST(TreeText, SerializeParseRoundTrips) {
  for (const std::string text : {"*", "*(1 1)", "*(2 1(1 1 3(3) 1))", "*(2 3(3 1(1 1 1)))",
                                 "*(1(5(5 4(4 4)) 1 3(3) 1) 2 2)", "*(12(12 3))"}) {
    EXPECT_EQ(sf::serialize_tree(sf::parse_tree(text)), text);
  }
}

TEST(TreeText, ParseRejectsMalformedInput) {
  for (const std::string text : {"", "(1)", "*(1", "*(1))", "*(x)", "*(1 f0)", "* (1)", "*()"}) {
    EXPECT_THROW((void)sf::parse_tree(text), std::invalid_argument) << text;
  }
}

TEST(TreeText, HookLeavesSerializeAsHookNames) {
  sf::TreeNode root{0, {sf::TreeNode{sf::hook_label(0), {}}, sf::TreeNode{2, {}}}};
  EXPECT_EQ(sf::serialize_tree(root), "*(f0 2)");
}

TEST(PreorderWord, ReadsNonRootLabelsDepthFirst) {
  EXPECT_EQ(sf::preorder_word(sf::parse_tree("*(2 1(1 1 3(3) 1))")),
            fixtures::word_from_digits("2111331"));
  EXPECT_EQ(sf::preorder_word(sf::parse_tree("*")), sf::Word{});
}

TEST(PreorderWord, RejectsUnresolvedHooks) {
  sf::TreeNode root{0, {sf::TreeNode{sf::hook_label(1), {}}}};
  EXPECT_THROW((void)sf::preorder_word(root), std::invalid_argument);
}

TEST(DotOutput, DescribesTheTree) {
  const std::string dot = sf::to_dot(sf::parse_tree("*(2 1(1 1 3(3) 1))"));
  EXPECT_NE(dot.find("digraph tree"), std::string::npos);
  EXPECT_NE(dot.find("ordering=out"), std::string::npos);
  // One node line per vertex: the root plus 7 labeled nodes.
  std::size_t nodes = 0;
  for (std::size_t at = dot.find("label="); at != std::string::npos;
       at = dot.find("label=", at + 1))
    ++nodes;
  EXPECT_EQ(nodes, 8u);
}

TEST(TreeForward, WorkedExamplesWithPivotThree) {
  const auto pi = fixtures::running_example();
  EXPECT_EQ(forward_text(pi, 3, hook({3}, 2)), "*(2 1(1 1 3(3) 1))");
  EXPECT_EQ(forward_text(pi, 3, hook({5}, 2)), "*(2 3(3) 1(1 1 1))");
  EXPECT_EQ(forward_text(pi, 3, hook({7}, 2)), "*(2 3(3 1(1 1 1)))");
  EXPECT_EQ(forward_text(pi, 3, hook({4}, 1)), "*(3(3) 1(1 1 1) 2)");
  EXPECT_EQ(forward_text(pi, 3, hook({7}, 1)), "*(3(3 1(1 1 1)) 2)");
}

TEST(TreeForward, WorkedExampleWithPivotOne) {
  EXPECT_EQ(forward_text(fixtures::running_example(), 1, hook({2}, 1)), "*(2(2 2) 3(3) 1 1)");
}

TEST(TreeForward, WorkedExampleWithNineElements) {
  const auto pi = sf::parse_cycles("(1 8)(2 9 7)(3)(4 6)(5)", 9);
  EXPECT_EQ(forward_text(pi, 9, hook({3, 1, 12}, 1)), "*(1(5(5 4(4 4)) 1 3(3) 1) 2 2)");
}

TEST(TreeForward, DegenerateCases) {
  EXPECT_EQ(forward_text(sf::parse_cycles("(1 2 3)", 3), 2, hook({}, 1)), "*(1 1)");
  EXPECT_EQ(forward_text(sf::Permutation::identity(1), 1, hook({}, 1)), "*");
}

TEST(TreeForward, RejectsIllFormedAssignments) {
  const auto pi = fixtures::running_example();
  EXPECT_THROW((void)sf::tree_forward(pi, 3, hook({}, 2)), std::invalid_argument);
  EXPECT_THROW((void)sf::tree_forward(pi, 3, hook({1, 2}, 2)), std::invalid_argument);
  EXPECT_THROW((void)sf::tree_forward(pi, 3, hook({8}, 2)), std::invalid_argument);
  EXPECT_THROW((void)sf::tree_forward(pi, 3, hook({0}, 2)), std::invalid_argument);
  EXPECT_THROW((void)sf::tree_forward(pi, 3, hook({3}, 0)), std::invalid_argument);
  EXPECT_THROW((void)sf::tree_forward(pi, 3, hook({3}, 3)), std::invalid_argument);
  EXPECT_THROW((void)sf::tree_forward(sf::parse_cycles("(1 2 3)", 3), 2, hook({}, 2)),
               std::invalid_argument);
  const auto nine = sf::parse_cycles("(1 8)(2 9 7)(3)(4 6)(5)", 9);
  EXPECT_THROW((void)sf::tree_forward(nine, 9, hook({3, 3, 12}, 1)), std::invalid_argument);
}

TEST(EnumerateHookDomain, RunningExampleSizes) {
  const auto pi = fixtures::running_example();
  // Injective maps into [7] of arity 1, times the pivot-cycle length.
  EXPECT_EQ(sf::enumerate_hook_domain(pi, 3).size(), 14u);
  EXPECT_EQ(sf::enumerate_hook_domain(pi, 1).size(), 21u);
  EXPECT_EQ(sf::enumerate_hook_domain(pi, 6).size(), 7u);
  const auto domain = sf::enumerate_hook_domain(pi, 3);
  EXPECT_TRUE(std::is_sorted(domain.begin(), domain.end()));
  EXPECT_EQ(domain.front(), hook({1}, 1));
  EXPECT_EQ(domain.back(), hook({7}, 2));
}

TEST(EnumerateHookDomain, DegenerateSingleton) {
  const auto domain = sf::enumerate_hook_domain(sf::parse_cycles("(1 2 3)", 3), 2);
  ASSERT_EQ(domain.size(), 1u);
  EXPECT_EQ(domain[0], hook({}, 1));
}

TEST(TreeInverse, RoundTripsTheWholeDomainForEveryPivot) {
  const auto pi = fixtures::running_example();
  for (int k = 1; k <= 6; ++k) {
    for (const auto& h : sf::enumerate_hook_domain(pi, k)) {
      const auto tree = sf::tree_forward(pi, k, h);
      EXPECT_EQ(sf::tree_inverse(pi, k, tree), h)
          << "pivot " << k << " tree " << sf::serialize_tree(tree);
    }
  }
}

TEST(TreeInverse, RoundTripsTheNineElementExample) {
  const auto pi = sf::parse_cycles("(1 8)(2 9 7)(3)(4 6)(5)", 9);
  const auto h = hook({3, 1, 12}, 1);
  EXPECT_EQ(sf::tree_inverse(pi, 9, sf::tree_forward(pi, 9, h)), h);
}

TEST(TreeInverse, AcceptsTheListedExampleTrees) {
  // Two valid trees with pivot 1 whose preorder words are known.
  const auto pi = fixtures::running_example();
  for (const auto& [text, digits] :
       std::vector<std::pair<std::string, std::string>>{{"*(1 3(3) 1 2(2 2))", "1331222"},
                                                        {"*(1 2(2 3(3) 2) 1)", "1223321"}}) {
    const auto tree = sf::parse_tree(text);
    EXPECT_EQ(sf::preorder_word(tree), fixtures::word_from_digits(digits));
    const auto h = sf::tree_inverse(pi, 1, tree);
    EXPECT_EQ(sf::serialize_tree(sf::tree_forward(pi, 1, h)), text);
  }
}

TEST(TreeInverse, RejectsForeignTrees) {
  const auto pi = fixtures::running_example();
  // Wrong leaf counts, a leaf under the wrong parent, a repeated internal
  // rank, and a malformed root.
  for (const std::string text : {"*(1 1 1)", "*(2 3(1) 1(1 1 3 1))", "*(2 2(3) 1(1 1 3 1))",
                                 "*(2 1(1 1 3(3) 1) 1)", "*(3(3) 3(3) 1(1 1 1))", "*(1 1)"}) {
    EXPECT_THROW((void)sf::tree_inverse(pi, 3, sf::parse_tree(text)), std::invalid_argument)
        << text;
  }
}

TEST(EnumerateTrees, RunningExampleCounts) {
  const auto pi = fixtures::running_example();
  EXPECT_EQ(sf::enumerate_trees(pi, 3).size(), 18u);
  EXPECT_EQ(sf::enumerate_trees(pi, 1).size(), 27u);
}

TEST(EnumerateTrees, OutputIsSortedAndDistinct) {
  const auto pi = fixtures::running_example();
  const auto trees = sf::enumerate_trees(pi, 3);
  std::vector<std::string> texts;
  for (const auto& tree : trees) texts.push_back(sf::serialize_tree(tree));
  EXPECT_TRUE(std::is_sorted(texts.begin(), texts.end()));
  EXPECT_EQ(std::set<std::string>(texts.begin(), texts.end()).size(), texts.size());
}

TEST(EnumerateTrees, ForwardImageIsContainedAndInjective) {
  const auto pi = fixtures::running_example();
  for (int k : {1, 3, 6}) {
    std::set<std::string> enumerated;
    for (const auto& tree : sf::enumerate_trees(pi, k))
      enumerated.insert(sf::serialize_tree(tree));
    std::set<std::string> image;
    const auto domain = sf::enumerate_hook_domain(pi, k);
    for (const auto& h : domain) {
      const std::string text = sf::serialize_tree(sf::tree_forward(pi, k, h));
      EXPECT_TRUE(enumerated.count(text)) << "pivot " << k << " tree " << text;
      image.insert(text);
    }
    // Distinct assignments build distinct trees.
    EXPECT_EQ(image.size(), domain.size()) << k;
  }
}

TEST(EnumerateTrees, DecodeInvertsEncodeExactlyOnTheImage) {
  // Every valid tree decodes to a legal assignment, but only trees the
  // encoder can build round trip; the others fold onto encoder output.
  const auto pi = fixtures::running_example();
  for (int k : {1, 3, 6}) {
    const auto domain = sf::enumerate_hook_domain(pi, k);
    const std::set<sf::HookAssignment> legal(domain.begin(), domain.end());
    std::size_t fixed = 0;
    for (const auto& tree : sf::enumerate_trees(pi, k)) {
      const auto h = sf::tree_inverse(pi, k, tree);
      ASSERT_TRUE(legal.count(h)) << "pivot " << k << " tree " << sf::serialize_tree(tree);
      if (sf::tree_forward(pi, k, h) == tree) ++fixed;
    }
    EXPECT_EQ(fixed, domain.size()) << k;
  }
}

TEST(EnumerateTrees, DegenerateSingleCycle) {
  const auto trees = sf::enumerate_trees(sf::parse_cycles("(1 2 3)", 3), 2);
  ASSERT_EQ(trees.size(), 1u);
  EXPECT_EQ(sf::serialize_tree(trees[0]), "*(1 1)");
}

TEST(EnumerateTrees, TinyBudgetThrows) {
  EXPECT_THROW((void)sf::enumerate_trees(fixtures::running_example(), 3, 3), sf::BudgetExceeded);
}

TEST(WordPreimages, CollidingAndUncoveredWords) {
  const auto pi = fixtures::running_example();
  using H = std::vector<sf::HookAssignment>;
  EXPECT_EQ(sf::word_preimages(pi, 3, fixtures::word_from_digits("2331111")),
            (H{hook({5}, 2), hook({7}, 2)}));
  EXPECT_EQ(sf::word_preimages(pi, 3, fixtures::word_from_digits("3311112")),
            (H{hook({4}, 1), hook({7}, 1)}));
  EXPECT_EQ(sf::word_preimages(pi, 3, fixtures::word_from_digits("2311113")), H{});
  EXPECT_EQ(sf::word_preimages(pi, 3, fixtures::word_from_digits("3111132")), H{});
  EXPECT_EQ(sf::word_preimages(pi, 3, fixtures::word_from_digits("2111331")), (H{hook({3}, 2)}));
}

TEST(WordPreimages, RejectsInvalidWords) {
  EXPECT_THROW(
      (void)sf::word_preimages(fixtures::running_example(), 3,
                               fixtures::word_from_digits("1111111")),
      std::invalid_argument);
}

TEST(ForwardWordTable, PartitionsTheDomain) {
  const auto pi = fixtures::running_example();
  for (int k : {1, 3}) {
    const auto table = sf::forward_word_table(pi, k);
    std::size_t total = 0;
    std::set<sf::HookAssignment> seen;
    for (const auto& [word, assignments] : table) {
      EXPECT_TRUE(sf::is_valid_word(word, pi, k));
      for (const auto& h : assignments) {
        EXPECT_TRUE(seen.insert(h).second);
        EXPECT_EQ(sf::preorder_word(sf::tree_forward(pi, k, h)), word);
      }
      total += assignments.size();
    }
    EXPECT_EQ(total, sf::enumerate_hook_domain(pi, k).size()) << k;
  }
}
