#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "starfac/permutation.hpp"
#include "starfac/star_oracle.hpp"
#include "starfac/tree_codec.hpp"
#include "starfac/word_codec.hpp"

namespace starfac {

/// The phi domain coordinate: the injection f plus the full tuple
/// (c_1..c_m), c_i in [l_i].  c_p drives the tree, the rest the enclosures.
struct PhiInput {
  std::vector<int> f;
  std::vector<int> c;

  friend bool operator==(const PhiInput& a, const PhiInput& b) {
    return a.f == b.f && a.c == b.c;
  }
};

struct MissingPreimage : std::runtime_error {
  Word word;
  MissingPreimage(Word w, int m)
      : std::runtime_error("phi_inv: word " + format_word(w, m) +
                           " has no hook-assignment preimage"),
        word(std::move(w)) {}
};

struct AmbiguousPreimage : std::runtime_error {
  Word word;
  std::vector<HookAssignment> witnesses;
  AmbiguousPreimage(Word w, std::vector<HookAssignment> wit, int m)
      : std::runtime_error("phi_inv: word " + format_word(w, m) + " has " +
                           std::to_string(wit.size()) + " hook-assignment preimages"),
        word(std::move(w)),
        witnesses(std::move(wit)) {}
};

/// Comma-separated values; empty sequence prints as the empty string.
[[nodiscard]] inline std::string format_int_list(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

[[nodiscard]] inline std::string format_hook_assignment(const HookAssignment& h) {
  return "(f=" + format_int_list(h.f) + ";c=" + std::to_string(h.c) + ")";
}

/// { b_(i,c_i) : i < p } united { b_(i,c_(i-1)) : i > p }: the c-indexed
/// element of each non-pivot standard-form cycle, returned in cycle order.
[[nodiscard]] inline std::vector<int> cycle_map(const Permutation& pi, int k,
                                                const EnclosureChoice& c) {
  const CycleDecomposition& d = pi.cycles();
  const int p = pivot_location(d, k).p;
  if (static_cast<int>(c.size()) != d.m - 1)
    throw std::invalid_argument("cycle_map: choice tuple has wrong arity");
  std::vector<int> letters;
  int slot = 0;
  for (int j = 1; j <= d.m; ++j) {
    if (j == p) continue;
    if (c[slot] < 1 || c[slot] > d.lengths[j - 1])
      throw std::invalid_argument("cycle_map: choice out of range");
    letters.push_back(d.cycles[j - 1][c[slot] - 1]);
    ++slot;
  }
  return letters;
}

/// Recovers the choice tuple from one enclosure letter per non-pivot cycle;
/// letters may arrive in any order.
[[nodiscard]] inline EnclosureChoice cycle_map_inv(const Permutation& pi, int k,
                                                   const std::vector<int>& letters) {
  const CycleDecomposition& d = pi.cycles();
  const int p = pivot_location(d, k).p;
  if (static_cast<int>(letters.size()) != d.m - 1)
    throw std::invalid_argument("cycle_map_inv: need one letter per non-pivot cycle");
  const std::vector<int> cycle_of = detail::cycle_index_of(d);
  std::vector<int> chosen(d.m + 1, 0);
  for (int letter : letters) {
    if (letter < 1 || letter > pi.n())
      throw std::invalid_argument("cycle_map_inv: letter out of range");
    const int j = cycle_of[letter];
    if (j == p) throw std::invalid_argument("cycle_map_inv: letter lies in the pivot cycle");
    if (chosen[j] != 0) throw std::invalid_argument("cycle_map_inv: two letters in one cycle");
    chosen[j] = letter;
  }
  EnclosureChoice c;
  for (int j = 1; j <= d.m; ++j) {
    if (j == p) continue;
    const auto& cycle = d.cycles[j - 1];
    const auto it = std::find(cycle.begin(), cycle.end(), chosen[j]);
    c.push_back(static_cast<int>(it - cycle.begin()) + 1);
  }
  return c;
}

namespace detail {

inline void check_phi_input(const CycleDecomposition& d, int p, const PhiInput& input) {
  if (d.m == 1) {
    if (!input.f.empty() || input.c != std::vector<int>{1})
      throw std::invalid_argument("phi: single cycle admits only (f=(), c=(1))");
    return;
  }
  if (static_cast<int>(input.c.size()) != d.m)
    throw std::invalid_argument("phi: coordinate tuple has wrong arity");
  for (int j = 1; j <= d.m; ++j) {
    if (input.c[j - 1] < 1 || input.c[j - 1] > d.lengths[j - 1])
      throw std::invalid_argument("phi: coordinate out of range");
  }
  check_hook_assignment(d, p, HookAssignment{input.f, input.c[p - 1]});
}

}  // namespace detail

/// rho applied to the tree's word and the non-pivot coordinates; lands in
/// star_k(pi).
[[nodiscard]] inline StarFactorization phi(const Permutation& pi, int k, const PhiInput& input) {
  const CycleDecomposition& d = pi.cycles();
  const int p = pivot_location(d, k).p;
  detail::check_phi_input(d, p, input);
  if (d.m == 1) {
    const Word w(pi.n() - 1, 1);
    return rho(pi, k, w, {});
  }
  const HookAssignment h{input.f, input.c[p - 1]};
  const Word w = preorder_word(tree_forward(pi, k, h));
  EnclosureChoice rest;
  for (int j = 1; j <= d.m; ++j) {
    if (j != p) rest.push_back(input.c[j - 1]);
  }
  return rho(pi, k, w, rest);
}

namespace detail {

[[nodiscard]] inline PhiInput assemble_phi_input(const CycleDecomposition& d, int p,
                                                 const HookAssignment& h,
                                                 const EnclosureChoice& rest) {
  PhiInput input;
  input.f = h.f;
  int slot = 0;
  for (int j = 1; j <= d.m; ++j) {
    if (j == p) {
      input.c.push_back(h.c);
    } else {
      input.c.push_back(rest[slot]);
      ++slot;
    }
  }
  return input;
}

}  // namespace detail

/// Inverts phi via rho_inv and the materialized word table.  A word with no
/// preimage raises MissingPreimage; one with several raises AmbiguousPreimage
/// carrying every witness.  Both are findings about the map, not crashes.
[[nodiscard]] inline PhiInput phi_inv(const Permutation& pi, int k,
                                      const StarFactorization& fac) {
  const CycleDecomposition& d = pi.cycles();
  const int p = pivot_location(d, k).p;
  const auto [w, rest] = rho_inv(pi, k, fac);
  if (d.m == 1) return PhiInput{{}, {1}};
  std::vector<HookAssignment> preimages = word_preimages(pi, k, w);
  if (preimages.empty()) throw MissingPreimage(w, d.m);
  if (preimages.size() > 1) throw AmbiguousPreimage(w, std::move(preimages), d.m);
  return detail::assemble_phi_input(d, p, preimages.front(), rest);
}

/// phi_inv that resolves ambiguity by taking the lexicographically least
/// hook assignment.  unique reports whether the choice was forced.
struct ForcedPreimage {
  PhiInput input;
  bool unique = true;
  std::size_t preimage_count = 1;
};

[[nodiscard]] inline ForcedPreimage phi_inv_lexicographic(const Permutation& pi, int k,
                                                          const StarFactorization& fac) {
  const CycleDecomposition& d = pi.cycles();
  const int p = pivot_location(d, k).p;
  const auto [w, rest] = rho_inv(pi, k, fac);
  if (d.m == 1) return ForcedPreimage{PhiInput{{}, {1}}, true, 1};
  const std::vector<HookAssignment> preimages = word_preimages(pi, k, w);
  if (preimages.empty()) throw MissingPreimage(w, d.m);
  return ForcedPreimage{detail::assemble_phi_input(d, p, preimages.front(), rest),
                        preimages.size() == 1, preimages.size()};
}

/// phi at the target pivot after phi_inv at the source pivot; refuses
/// ambiguous preimages.
[[nodiscard]] inline StarFactorization translate(const Permutation& pi, int k, int k_to,
                                                 const StarFactorization& fac) {
  return phi(pi, k_to, phi_inv(pi, k, fac));
}

[[nodiscard]] inline std::pair<StarFactorization, ForcedPreimage> translate_lexicographic(
    const Permutation& pi, int k, int k_to, const StarFactorization& fac) {
  ForcedPreimage forced = phi_inv_lexicographic(pi, k, fac);
  return {phi(pi, k_to, forced.input), forced};
}

/// Every count computed, never estimated; collisions and uncovered words are
/// data, not errors.
struct AuditReport {
  std::uint64_t formula_count = 0;
  std::uint64_t oracle_count = 0;
  std::uint64_t valid_word_count = 0;
  std::uint64_t tree_count = 0;
  std::uint64_t phi_image_count = 0;
  std::vector<std::pair<Word, std::vector<HookAssignment>>> collisions;
  std::vector<Word> uncovered_words;
  std::vector<std::pair<std::string, bool>> examples_verified;
};

namespace detail {

inline void verify_examples(const Permutation& pi, int k,
                            const std::set<std::string>& tree_shapes, AuditReport& report) {
  auto add = [&](const std::string& name, bool pass) {
    report.examples_verified.emplace_back(name, pass);
  };
  auto check = [&](const char* name, auto&& body) {
    bool pass = false;
    try {
      pass = body();
    } catch (const std::exception&) {
      pass = false;
    }
    add(name, pass);
  };
  const std::string sf = format_cycles(pi);
  if (sf == "(1 4 2)(3 5)(6)") {
    check("count_value_42", [&] { return count_formula(pi, k) == 42; });
    if (k == 3) {
      const StarFactorization fac =
          parse_factorization("(3 5)(3 4)(3 1)(3 2)(3 6)(3 6)(3 4)", 6, 3);
      const Word w = parse_word("2111331", 3);
      check("enclosure_letters_4_6", [&] {
        const Enclosures enc = enclosures_of(fac, pi);
        return enc.letters == std::vector<int>{4, 6} && enc.choice == EnclosureChoice{2, 1};
      });
      check("rho_word_2111331_choice_2_1", [&] { return rho(pi, 3, w, {2, 1}) == fac; });
      check("word_of_factorization_2111331", [&] { return word_of(fac, pi) == w; });
      check("tree_f3_c2_shape", [&] {
        return serialize_tree(tree_forward(pi, 3, HookAssignment{{3}, 2})) ==
               "*(2 1(1 1 3(3) 1))";
      });
      check("tree_f3_c2_word", [&] {
        return preorder_word(tree_forward(pi, 3, HookAssignment{{3}, 2})) == w;
      });
      check("tree_word_3321111", [&] {
        const std::string shape = "*(3(3) 2 1(1 1 1))";
        return tree_shapes.count(shape) == 1 &&
               preorder_word(parse_tree(shape)) == parse_word("3321111", 3);
      });
      check("tree_word_3111132", [&] {
        const std::string shape = "*(3(1(1 1 1) 3) 2)";
        return tree_shapes.count(shape) == 1 &&
               preorder_word(parse_tree(shape)) == parse_word("3111132", 3);
      });
      check("phi_f3_c_2_2_1", [&] { return phi(pi, 3, PhiInput{{3}, {2, 2, 1}}) == fac; });
      check("translate_to_pivot_1", [&] {
        return format_factorization(translate(pi, 3, 1, fac)) ==
               "(1 2)(1 5)(1 3)(1 5)(1 6)(1 6)(1 4)";
      });
    }
    if (k == 1) {
      check("tree_word_1331222", [&] {
        const std::string shape = "*(1 3(3) 1 2(2 2))";
        return tree_shapes.count(shape) == 1 &&
               preorder_word(parse_tree(shape)) == parse_word("1331222", 3);
      });
      check("tree_word_1223321", [&] {
        const std::string shape = "*(1 2(2 3(3) 2) 1)";
        return tree_shapes.count(shape) == 1 &&
               preorder_word(parse_tree(shape)) == parse_word("1223321", 3);
      });
    }
  }
  if (sf == "(1 8)(2 9 7)(3)(4 6)(5)" && k == 9) {
    check("cycle_letters_1_3_6_5", [&] {
      return cycle_map(pi, 9, {1, 1, 2, 1}) == std::vector<int>{1, 3, 6, 5};
    });
    check("tree_g_3_1_12_shape", [&] {
      return serialize_tree(tree_forward(pi, 9, HookAssignment{{3, 1, 12}, 1})) ==
             "*(1(5(5 4(4 4)) 1 3(3) 1) 2 2)";
    });
    check("tree_g_3_1_12_word", [&] {
      return preorder_word(tree_forward(pi, 9, HookAssignment{{3, 1, 12}, 1})) ==
             parse_word("155444133122", 5);
    });
    check("phi_g_c_1_1_1_2_1", [&] {
      return format_factorization(phi(pi, 9, PhiInput{{3, 1, 12}, {1, 1, 1, 2, 1}})) ==
             "(9 1)(9 5)(9 5)(9 6)(9 4)(9 6)(9 8)(9 3)(9 3)(9 1)(9 2)(9 7)";
    });
  }
}

}  // namespace detail

/// Exhaustive cross-check of every construction against the oracle at one
/// (pi, k).  Deterministic; all list fields in lexicographic order.
[[nodiscard]] inline AuditReport audit(const Permutation& pi, int k,
                                       std::uint64_t budget = 100'000'000) {
  if (k < 1 || k > pi.n()) throw std::invalid_argument("audit: pivot out of range");
  const CycleDecomposition& d = pi.cycles();
  const int p = pivot_location(d, k).p;
  AuditReport report;
  report.formula_count = count_formula(pi, k);
  report.oracle_count = enumerate_brute(pi, k, budget).size();
  const std::vector<Word> words = enumerate_valid_words(pi, k);
  report.valid_word_count = words.size();
  std::set<std::string> tree_shapes;
  for (const TreeNode& tree : enumerate_trees(pi, k, budget))
    tree_shapes.insert(serialize_tree(tree));
  report.tree_count = tree_shapes.size();
  const auto table = forward_word_table(pi, k);
  for (const auto& [w, preimages] : table) {
    if (preimages.size() > 1) report.collisions.emplace_back(w, preimages);
  }
  for (const Word& w : words) {
    if (table.find(w) == table.end()) report.uncovered_words.push_back(w);
  }
  std::vector<int> rest_lengths;
  for (int j = 1; j <= d.m; ++j) {
    if (j != p) rest_lengths.push_back(d.lengths[j - 1]);
  }
  std::set<std::vector<int>> image;
  for (const auto& [w, preimages] : table) {
    std::vector<int> rest(rest_lengths.size(), 1);
    while (true) {
      image.insert(rho(pi, k, w, rest).others);
      int slot = static_cast<int>(rest.size()) - 1;
      while (slot >= 0 && rest[slot] == rest_lengths[slot]) {
        rest[slot] = 1;
        --slot;
      }
      if (slot < 0) break;
      ++rest[slot];
    }
  }
  report.phi_image_count = image.size();
  detail::verify_examples(pi, k, tree_shapes, report);
  return report;
}

/// Key=value lines in fixed field order; list counts are followed by one
/// detail line per entry.
[[nodiscard]] inline std::string format_audit(const Permutation& pi, const AuditReport& report) {
  const int m = pi.cycles().m;
  std::string out;
  out += "formula_count=" + std::to_string(report.formula_count) + "\n";
  out += "oracle_count=" + std::to_string(report.oracle_count) + "\n";
  out += "valid_word_count=" + std::to_string(report.valid_word_count) + "\n";
  out += "tree_count=" + std::to_string(report.tree_count) + "\n";
  out += "phi_image_count=" + std::to_string(report.phi_image_count) + "\n";
  out += "collisions=" + std::to_string(report.collisions.size()) + "\n";
  for (const auto& [w, preimages] : report.collisions) {
    out += "collision word=" + format_word(w, m) + " preimages=";
    for (std::size_t i = 0; i < preimages.size(); ++i) {
      if (i > 0) out += ',';
      out += format_hook_assignment(preimages[i]);
    }
    out += "\n";
  }
  out += "uncovered_words=" + std::to_string(report.uncovered_words.size()) + "\n";
  for (const Word& w : report.uncovered_words) out += "uncovered word=" + format_word(w, m) + "\n";
  out += "examples_verified=" + std::to_string(report.examples_verified.size()) + "\n";
  for (const auto& [name, pass] : report.examples_verified)
    out += "example " + name + "=" + (pass ? "pass" : "fail") + "\n";
  return out;
}

}  // namespace starfac
