#include "starfac/permutation.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <vector>

namespace starfac {
namespace {

std::vector<std::vector<int>> all_images(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

TEST(ParseCycles, WorkedExample) {
  const Permutation pi = parse_cycles("(4 2 1)(6)(3 5)", 6);
  EXPECT_EQ(pi(4), 2);
  EXPECT_EQ(pi(2), 1);
  EXPECT_EQ(pi(1), 4);
  EXPECT_EQ(pi(3), 5);
  EXPECT_EQ(pi(5), 3);
  EXPECT_EQ(pi(6), 6);
}

TEST(ParseCycles, EmptyTextIsIdentity) {
  EXPECT_EQ(parse_cycles("", 3), Permutation::identity(3));
}

TEST(ParseCycles, DisjointCyclesCommute) {
  EXPECT_EQ(parse_cycles("(1 8)(2 9 7)(4 6)", 9), parse_cycles("(2 9 7)(1 8)(4 6)", 9));
}

TEST(ParseCycles, WhitespaceTolerant) {
  EXPECT_EQ(parse_cycles("  ( 4 2 1 ) ( 3 5 )  ", 6), parse_cycles("(4 2 1)(3 5)", 6));
}

TEST(ParseCycles, Errors) {
  EXPECT_THROW((void)parse_cycles("(1 2)(2 3)", 3), std::invalid_argument);  // repeated element
  EXPECT_THROW((void)parse_cycles("(1 4)", 3), std::invalid_argument);       // out of range
  EXPECT_THROW((void)parse_cycles("(1 2", 3), std::invalid_argument);        // unclosed
  EXPECT_THROW((void)parse_cycles("1 2)", 3), std::invalid_argument);        // missing open
  EXPECT_THROW((void)parse_cycles("()", 3), std::invalid_argument);          // empty cycle
  EXPECT_THROW((void)parse_cycles("(0)", 3), std::invalid_argument);         // zero element
  EXPECT_THROW((void)parse_cycles("", 0), std::invalid_argument);            // empty ground set
}

TEST(StandardForm, WorkedExamples) {
  EXPECT_EQ(format_cycles(parse_cycles("(4 2 1)(6)(3 5)", 6)), "(1 4 2)(3 5)(6)");
  EXPECT_EQ(format_cycles(parse_cycles("(6)(2 1 4)(5 3)", 6)), "(1 4 2)(3 5)(6)");
  EXPECT_EQ(format_cycles(Permutation::identity(3)), "(1)(2)(3)");
}

TEST(StandardForm, InvariantsHoldForAllOfS5) {
  for (const auto& image : all_images(5)) {
    const Permutation pi(image);
    const CycleDecomposition& d = pi.cycles();
    int total = 0;
    std::vector<char> seen(6, 0);
    int prev_min = 0;
    for (const auto& cycle : d.cycles) {
      ASSERT_FALSE(cycle.empty());
      const int mn = *std::min_element(cycle.begin(), cycle.end());
      EXPECT_EQ(cycle.front(), mn);
      EXPECT_LT(prev_min, mn);
      prev_min = mn;
      for (int x : cycle) {
        EXPECT_FALSE(seen[x]);
        seen[x] = 1;
        ++total;
      }
    }
    EXPECT_EQ(total, 5);
    EXPECT_EQ(d.m, static_cast<int>(d.cycles.size()));
    EXPECT_EQ(d.n(), 5);
  }
}

TEST(StandardForm, RoundTripsThroughText) {
  for (const auto& image : all_images(5)) {
    const Permutation pi(image);
    EXPECT_EQ(parse_cycles(format_cycles(pi), 5), pi);
  }
}

TEST(Compose, AppliesRightToLeft) {
  const Permutation a = parse_cycles("(3 5)", 5);
  const Permutation b = parse_cycles("(3 4)", 5);
  EXPECT_EQ(format_cycles(compose(a, b)), "(1)(2)(3 4 5)");
}

TEST(Compose, IdentityAndInvolution) {
  const Permutation b = parse_cycles("(1 3 2)", 3);
  EXPECT_EQ(compose(Permutation::identity(3), b), b);
  const Permutation t = parse_cycles("(1 2)", 2);
  EXPECT_EQ(compose(t, t), Permutation::identity(2));
  EXPECT_THROW((void)compose(t, b), std::invalid_argument);
}

TEST(Compose, InverseRoundTripUpToN7) {
  for (int n : {1, 4, 7}) {
    int checked = 0;
    for (const auto& image : all_images(n)) {
      std::vector<int> inverse(n);
      for (int x = 1; x <= n; ++x) inverse[image[x - 1] - 1] = x;
      EXPECT_EQ(compose(Permutation(image), Permutation(inverse)), Permutation::identity(n));
      if (++checked == 500) break;  // spot sample for n = 7
    }
  }
}

TEST(PivotLocation, WorkedExamples) {
  const Permutation pi = parse_cycles("(1 4 2)(3 5)(6)", 6);
  EXPECT_EQ(pivot_location(pi.cycles(), 3).p, 2);
  EXPECT_EQ(pivot_location(pi.cycles(), 3).pos, 1);
  EXPECT_EQ(pivot_location(pi.cycles(), 6).p, 3);
  EXPECT_EQ(pivot_location(pi.cycles(), 6).pos, 1);
  const Permutation big = parse_cycles("(1 8)(2 9 7)(4 6)", 9);
  EXPECT_EQ(pivot_location(big.cycles(), 9).p, 2);
  EXPECT_EQ(pivot_location(big.cycles(), 9).pos, 2);
  EXPECT_THROW((void)pivot_location(pi.cycles(), 0), std::invalid_argument);
  EXPECT_THROW((void)pivot_location(pi.cycles(), 7), std::invalid_argument);
}

TEST(CycleType, InvariantUnderConjugationOnS5) {
  const auto images = all_images(5);
  auto sorted_lengths = [](const Permutation& pi) {
    std::vector<int> lengths = pi.cycles().lengths;
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  };
  const Permutation pi(images[37]);
  for (const auto& image : images) {
    const Permutation sigma(image);
    std::vector<int> inverse(5);
    for (int x = 1; x <= 5; ++x) inverse[image[x - 1] - 1] = x;
    const Permutation conj = compose(sigma, compose(pi, Permutation(inverse)));
    EXPECT_EQ(sorted_lengths(conj), sorted_lengths(pi));
  }
}

TEST(FallingFactorial, Values) {
  EXPECT_EQ(falling_factorial(7, 1), 7u);
  EXPECT_EQ(falling_factorial(5, 0), 1u);
  EXPECT_EQ(falling_factorial(12, 3), 1320u);
  EXPECT_EQ(falling_factorial(0, 0), 1u);
  EXPECT_THROW((void)falling_factorial(3, 4), std::invalid_argument);
}

}  // namespace
}  // namespace starfac
