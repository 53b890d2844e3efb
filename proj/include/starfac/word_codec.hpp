#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "starfac/permutation.hpp"
#include "starfac/star_oracle.hpp"

namespace starfac {

/// A word over cycle indices [m]; valid words have length n+m-2.
using Word = std::vector<int>;

/// c_i in [l'_i] where (l'_1..l'_(m-1)) are the non-pivot cycle lengths in
/// standard-form order (pivot cycle deleted).
using EnclosureChoice = std::vector<int>;

/// One enclosure letter per non-pivot cycle, in standard-form cycle order,
/// with choice[i] the letter's 1-based position inside its cycle.
struct Enclosures {
  std::vector<int> letters;
  EnclosureChoice choice;

  friend bool operator==(const Enclosures& a, const Enclosures& b) {
    return a.letters == b.letters && a.choice == b.choice;
  }
};

/// Digits concatenated while every letter is a single digit, comma-separated
/// otherwise.
[[nodiscard]] inline std::string format_word(const Word& w, int m) {
  std::string out;
  const bool compact = m <= 9;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

[[nodiscard]] inline Word parse_word(std::string_view text, int m) {
  Word w;
  if (text.find(',') != std::string_view::npos) {
    std::size_t i = 0;
    while (i <= text.size()) {
      std::size_t j = text.find(',', i);
      if (j == std::string_view::npos) j = text.size();
      if (i == j) throw std::invalid_argument("parse_word: empty letter");
      long value = 0;
      for (std::size_t t = i; t < j; ++t) {
        if (!std::isdigit(static_cast<unsigned char>(text[t])))
          throw std::invalid_argument("parse_word: expected digit");
        value = value * 10 + (text[t] - '0');
        if (value > m) throw std::invalid_argument("parse_word: letter out of range");
      }
      if (value < 1) throw std::invalid_argument("parse_word: letter out of range");
      w.push_back(static_cast<int>(value));
      if (j == text.size()) break;
      i = j + 1;
    }
    return w;
  }
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("parse_word: expected digit");
    const int value = ch - '0';
    if (value < 1 || value > m) throw std::invalid_argument("parse_word: letter out of range");
    w.push_back(value);
  }
  return w;
}

namespace detail {

/// Table from element to the 1-based index of its standard-form cycle.
[[nodiscard]] inline std::vector<int> cycle_index_of(const CycleDecomposition& d) {
  std::vector<int> idx(d.n() + 1, 0);
  for (int ci = 0; ci < d.m; ++ci) {
    for (int x : d.cycles[ci]) idx[x] = ci + 1;
  }
  return idx;
}

inline void require_member(const StarFactorization& fac, const Permutation& pi,
                           const char* who) {
  if (fac.n != pi.n()) throw std::invalid_argument(std::string(who) + ": size mismatch");
  if (static_cast<int>(fac.others.size()) != minimal_length(pi) ||
      !is_transitive(fac) || !(evaluate(fac) == pi))
    throw std::invalid_argument(std::string(who) +
                                ": not a minimal transitive star factorization of the permutation");
}

}  // namespace detail

/// Letter i of the result is the standard-form cycle index (in pi) of the i-th
/// factor's non-pivot element.
[[nodiscard]] inline Word word_of(const StarFactorization& fac, const Permutation& pi) {
  detail::require_member(fac, pi, "word_of");
  const std::vector<int> idx = detail::cycle_index_of(pi.cycles());
  Word w;
  w.reserve(fac.others.size());
  for (int d : fac.others) w.push_back(idx[d]);
  return w;
}

/// The four conditions characterizing images of minimal transitive star
/// factorizations: letter p occurs l_p - 1 times, letter j != p occurs l_j + 1
/// times, no scattered subsequence i j i j with i != j, and no scattered
/// subsequence j p j with j != p.
[[nodiscard]] inline bool is_valid_word(const Word& w, const Permutation& pi, int k) {
  if (k < 1 || k > pi.n()) throw std::invalid_argument("is_valid_word: pivot out of range");
  const CycleDecomposition& d = pi.cycles();
  const int m = d.m;
  const int p = pivot_location(d, k).p;
  if (static_cast<int>(w.size()) != minimal_length(pi)) return false;
  std::vector<int> count(m + 1, 0);
  for (int letter : w) {
    if (letter < 1 || letter > m) return false;
    ++count[letter];
  }
  for (int j = 1; j <= m; ++j) {
    const int expect = j == p ? d.lengths[j - 1] - 1 : d.lengths[j - 1] + 1;
    if (count[j] != expect) return false;
  }
  // Greedy prefix automata; one pass suffices because each pattern alternates.
  std::vector<std::vector<int>> abab(m + 1, std::vector<int>(m + 1, 0));
  std::vector<int> jpj(m + 1, 0);
  for (int x : w) {
    for (int other = 1; other <= m; ++other) {
      if (other == x) continue;
      int& fwd = abab[x][other];   // pattern x other x other
      int& bwd = abab[other][x];   // pattern other x other x
      if (fwd == 0 || fwd == 2) ++fwd;
      if (bwd == 1 || bwd == 3) ++bwd;
      if (bwd >= 4) return false;
    }
    if (x == p) {
      for (int j = 1; j <= m; ++j) {
        if (j != p && jpj[j] == 1) jpj[j] = 2;
      }
    } else {
      if (jpj[x] == 0) jpj[x] = 1;
      else if (jpj[x] == 2) return false;
    }
  }
  return true;
}

namespace detail {

struct WordEnumState {
  int m = 0;
  int p = 0;
  int length = 0;
  std::vector<int> remaining;
  std::vector<int> prefix;
  std::vector<std::vector<int>> abab;  // abab[a][b]: matched prefix of a b a b
  std::vector<int> jpj;                // per j != p: matched prefix of j p j
  std::vector<Word>* out = nullptr;
};

inline void word_dfs(WordEnumState& st, int depth) {
  if (depth == st.length) {
    st.out->push_back(st.prefix);
    return;
  }
  for (int x = 1; x <= st.m; ++x) {
    if (st.remaining[x] == 0) continue;
    bool violation = false;
    for (int other = 1; other <= st.m && !violation; ++other) {
      if (other != x && st.abab[other][x] == 3) violation = true;
    }
    if (x != st.p && st.jpj[x] == 2) violation = true;
    if (violation) continue;
    const auto saved_abab = st.abab;
    const auto saved_jpj = st.jpj;
    for (int other = 1; other <= st.m; ++other) {
      if (other == x) continue;
      int& fwd = st.abab[x][other];
      int& bwd = st.abab[other][x];
      if (fwd == 0 || fwd == 2) ++fwd;
      if (bwd == 1 || bwd == 3) ++bwd;
    }
    if (x == st.p) {
      for (int j = 1; j <= st.m; ++j) {
        if (j != st.p && st.jpj[j] == 1) st.jpj[j] = 2;
      }
    } else if (st.jpj[x] == 0) {
      st.jpj[x] = 1;
    }
    --st.remaining[x];
    st.prefix.push_back(x);
    word_dfs(st, depth + 1);
    st.prefix.pop_back();
    ++st.remaining[x];
    st.abab = saved_abab;
    st.jpj = saved_jpj;
  }
}

}  // namespace detail

/// All valid words for (pi, k), in increasing lexicographic order.
[[nodiscard]] inline std::vector<Word> enumerate_valid_words(const Permutation& pi, int k) {
  if (k < 1 || k > pi.n()) throw std::invalid_argument("enumerate_valid_words: pivot out of range");
  const CycleDecomposition& d = pi.cycles();
  detail::WordEnumState st;
  st.m = d.m;
  st.p = pivot_location(d, k).p;
  st.length = minimal_length(pi);
  st.remaining.assign(st.m + 1, 0);
  for (int j = 1; j <= st.m; ++j)
    st.remaining[j] = j == st.p ? d.lengths[j - 1] - 1 : d.lengths[j - 1] + 1;
  st.abab.assign(st.m + 1, std::vector<int>(st.m + 1, 0));
  st.jpj.assign(st.m + 1, 0);
  std::vector<Word> out;
  st.out = &out;
  detail::word_dfs(st, 0);
  return out;
}

/// Per non-pivot cycle, the letter at which its factor subsequence starts and
/// ends, plus that letter's position inside the cycle.
[[nodiscard]] inline Enclosures enclosures_of(const StarFactorization& fac, const Permutation& pi) {
  detail::require_member(fac, pi, "enclosures_of");
  const CycleDecomposition& d = pi.cycles();
  const int p = pivot_location(d, fac.k).p;
  Enclosures enc;
  std::vector<int> first(d.m + 1, 0), last(d.m + 1, 0);
  const std::vector<int> idx = detail::cycle_index_of(d);
  for (int i = 0; i < static_cast<int>(fac.others.size()); ++i) {
    const int j = idx[fac.others[i]];
    if (first[j] == 0) first[j] = fac.others[i];
    last[j] = fac.others[i];
  }
  for (int j = 1; j <= d.m; ++j) {
    if (j == p) continue;
    if (first[j] != last[j])
      throw std::logic_error("enclosures_of: cycle subsequence does not close on one letter");
    const auto& cycle = d.cycles[j - 1];
    const auto it = std::find(cycle.begin(), cycle.end(), first[j]);
    enc.letters.push_back(first[j]);
    enc.choice.push_back(static_cast<int>(it - cycle.begin()) + 1);
  }
  return enc;
}

/// Substitutes each cycle's minimal factor sequence into the word: the pivot
/// cycle contributes its unique sequence, the i-th non-pivot cycle the one
/// starting at its c_i-th element.
[[nodiscard]] inline StarFactorization rho(const Permutation& pi, int k, const Word& w,
                                           const EnclosureChoice& c) {
  if (!is_valid_word(w, pi, k)) throw std::invalid_argument("rho: invalid word");
  const CycleDecomposition& d = pi.cycles();
  const int p = pivot_location(d, k).p;
  if (static_cast<int>(c.size()) != d.m - 1)
    throw std::invalid_argument("rho: choice tuple has wrong arity");
  std::vector<std::vector<StarTransposition>> pieces(d.m + 1);
  int slot = 0;
  for (int j = 1; j <= d.m; ++j) {
    if (j == p) {
      pieces[j] = factor_single_cycle(d.cycles[j - 1], k, pivot_location(d, k).pos);
    } else {
      const int len = d.lengths[j - 1];
      if (c[slot] < 1 || c[slot] > len)
        throw std::invalid_argument("rho: choice out of range");
      pieces[j] = factor_single_cycle(d.cycles[j - 1], k, c[slot]);
      ++slot;
    }
  }
  StarFactorization fac{pi.n(), k, {}};
  std::vector<std::size_t> next(d.m + 1, 0);
  for (int letter : w) fac.others.push_back(pieces[letter][next[letter]++].i);
  return fac;
}

/// Decomposes a member of star_k(pi) into its word and enclosure choice;
/// rho of the result reproduces the input.
[[nodiscard]] inline std::pair<Word, EnclosureChoice> rho_inv(const Permutation& pi, int k,
                                                              const StarFactorization& fac) {
  if (fac.k != k) throw std::invalid_argument("rho_inv: pivot mismatch");
  return {word_of(fac, pi), enclosures_of(fac, pi).choice};
}

}  // namespace starfac
