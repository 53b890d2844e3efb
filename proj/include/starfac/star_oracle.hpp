#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "starfac/permutation.hpp"

namespace starfac {

/// A transposition (k i) of the pivot k with another element.
struct StarTransposition {
  int k = 0;
  int i = 0;  // i != k

  friend bool operator==(const StarTransposition& a, const StarTransposition& b) {
    return a.k == b.k && a.i == b.i;
  }
};

/// The product (k o_1)(k o_2)...(k o_r), applied right-to-left: the rightmost
/// factor acts first on an argument.
struct StarFactorization {
  int n = 0;
  int k = 0;
  std::vector<int> others;  // each in [n] minus {k}

  friend bool operator==(const StarFactorization& a, const StarFactorization& b) {
    return a.n == b.n && a.k == b.k && a.others == b.others;
  }
  friend bool operator<(const StarFactorization& a, const StarFactorization& b) {
    return a.others < b.others;
  }
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline void check_star_factorization(const StarFactorization& fac) {
  if (fac.n < 1) throw std::invalid_argument("factorization: ground set must be nonempty");
  if (fac.k < 1 || fac.k > fac.n)
    throw std::invalid_argument("factorization: pivot out of range");
  for (int d : fac.others) {
    if (d < 1 || d > fac.n) throw std::invalid_argument("factorization: element out of range");
    if (d == fac.k) throw std::invalid_argument("factorization: factor repeats the pivot");
  }
}

/// Product permutation of the factorization.  Appending a factor (k d) on the
/// right swaps the image values at k and d, so the whole product is a single
/// left-to-right sweep.
[[nodiscard]] inline Permutation evaluate(const StarFactorization& fac) {
  check_star_factorization(fac);
  std::vector<int> image(fac.n);
  std::iota(image.begin(), image.end(), 1);
  for (int d : fac.others) std::swap(image[fac.k - 1], image[d - 1]);
  return Permutation(std::move(image));
}

/// True iff the factors reach every element: {o_1..o_r} = [n] minus {k}.
[[nodiscard]] inline bool is_transitive(const StarFactorization& fac) {
  check_star_factorization(fac);
  std::vector<char> used(fac.n + 1, 0);
  for (int d : fac.others) used[d] = 1;
  for (int x = 1; x <= fac.n; ++x) {
    if (x != fac.k && !used[x]) return false;
  }
  return true;
}

/// n + m - 2, the exact length of every minimal transitive star factorization.
[[nodiscard]] inline int minimal_length(const Permutation& pi) {
  return pi.n() + pi.cycles().m - 2;
}

/// |star_k(pi)| = (n+m-2)_(m-2) * l_1...l_m for m >= 2; a single cycle has
/// exactly one factorization.  Independent of k.
[[nodiscard]] inline std::uint64_t count_formula(const Permutation& pi, int k) {
  if (k < 1 || k > pi.n()) throw std::invalid_argument("count_formula: pivot out of range");
  const CycleDecomposition& d = pi.cycles();
  if (d.m == 1) return 1;
  std::uint64_t count = falling_factorial(
      static_cast<std::uint64_t>(pi.n() + d.m - 2), static_cast<std::uint64_t>(d.m - 2));
  for (int len : d.lengths) count *= static_cast<std::uint64_t>(len);
  return count;
}

/// Minimal star factorization of one cycle, per the two shapes every minimal
/// transitive factorization decomposes into.  If k is in the cycle (then
/// enclosure_index must be k's 1-based position), the unique factorization of
/// (k a_2 .. a_l) is (k a_l)(k a_(l-1))..(k a_2).  Otherwise the cycle
/// (b_1 .. b_l) has l factorizations, one per starting index i:
/// (k b_i)(k b_(i+l-1))..(k b_(i+1))(k b_i), subscripts cyclic.
[[nodiscard]] inline std::vector<StarTransposition> factor_single_cycle(
    const std::vector<int>& cycle, int k, int enclosure_index) {
  if (cycle.empty()) throw std::invalid_argument("factor_single_cycle: empty cycle");
  const int l = static_cast<int>(cycle.size());
  int k_pos = 0;
  for (int j = 0; j < l; ++j) {
    if (cycle[j] == k) k_pos = j + 1;
  }
  std::vector<StarTransposition> out;
  if (k_pos != 0) {
    if (enclosure_index != k_pos)
      throw std::invalid_argument("factor_single_cycle: index must locate the pivot");
    for (int t = l - 1; t >= 1; --t)
      out.push_back({k, cycle[(k_pos - 1 + t) % l]});
    return out;
  }
  if (enclosure_index < 1 || enclosure_index > l)
    throw std::invalid_argument("factor_single_cycle: index out of range");
  const int i = enclosure_index - 1;  // 0-based
  out.push_back({k, cycle[i]});
  for (int t = l - 1; t >= 1; --t)
    out.push_back({k, cycle[(i + t) % l]});
  out.push_back({k, cycle[i]});
  return out;
}

/// Concatenated "(k i)" factors in product order.
[[nodiscard]] inline std::string format_factorization(const StarFactorization& fac) {
  std::string out;
  for (int d : fac.others) {
    out += '(';
    out += std::to_string(fac.k);
    out += ' ';
    out += std::to_string(d);
    out += ')';
  }
  return out;
}

/// Parses concatenated "(k i)" pairs; the first element of every pair must be
/// the pivot.  The empty string is the empty factorization.
[[nodiscard]] inline StarFactorization parse_factorization(std::string_view text, int n, int k) {
  if (n < 1) throw std::invalid_argument("parse_factorization: ground set must be nonempty");
  if (k < 1 || k > n) throw std::invalid_argument("parse_factorization: pivot out of range");
  StarFactorization fac{n, k, {}};
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() -> int {
    skip_space();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("parse_factorization: expected element");
    long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > n) throw std::invalid_argument("parse_factorization: element out of range");
      ++i;
    }
    if (value < 1) throw std::invalid_argument("parse_factorization: element out of range");
    return static_cast<int>(value);
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("parse_factorization: expected '('");
    ++i;
    const int first = read_int();
    const int second = read_int();
    skip_space();
    if (i >= text.size() || text[i] != ')')
      throw std::invalid_argument("parse_factorization: expected ')'");
    ++i;
    if (first != k) throw std::invalid_argument("parse_factorization: factor must start with the pivot");
    if (second == k) throw std::invalid_argument("parse_factorization: factor repeats the pivot");
    fac.others.push_back(second);
    skip_space();
  }
  return fac;
}

namespace detail {

/// Least number of star factors (pivot k) whose product is the residual and
/// whose symbols cover every currently unused symbol: with U the forced symbol
/// set, any completion is transitive on U united {k}, so it needs at least
/// n(U)+m(U)-2 factors.  Enlarging U only adds fixed points at +2 apiece, so
/// the forced set attains the bound and fixes the parity of every completion.
inline int residual_lower_bound(const std::vector<int>& res, int k,
                                const std::vector<int>& use_count) {
  const int n = static_cast<int>(res.size()) - 1;
  int bound = 0;
  std::vector<char> visited(n + 1, 0);
  for (int start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    if (res[start] == start) {
      visited[start] = 1;
      if (start != k && use_count[start] == 0) bound += 2;
      continue;
    }
    int len = 0;
    bool has_pivot = false;
    int x = start;
    do {
      visited[x] = 1;
      has_pivot = has_pivot || x == k;
      ++len;
      x = res[x];
    } while (x != start);
    bound += has_pivot ? len - 1 : len + 1;
  }
  return bound;
}

struct BruteState {
  int n = 0;
  int k = 0;
  int target_len = 0;
  std::uint64_t budget = 0;
  std::uint64_t steps = 0;
  std::vector<int> res;      // residual image: remaining factors must produce it
  std::vector<int> res_inv;
  std::vector<int> use_count;  // per-symbol occurrences in the current prefix
  std::vector<int> prefix;
  std::vector<StarFactorization>* out = nullptr;
};

inline void brute_dfs(BruteState& st, int depth, int unused) {
  if (++st.steps > st.budget)
    throw BudgetExceeded("enumerate_brute: step budget exceeded");
  const int rem = st.target_len - depth;
  if (rem == 0) {
    if (unused != 0) return;
    for (int x = 1; x <= st.n; ++x) {
      if (st.res[x] != x) return;
    }
    st.out->push_back({st.n, st.k, st.prefix});
    return;
  }
  if (rem < unused) return;
  const int bound = residual_lower_bound(st.res, st.k, st.use_count);
  if (bound > rem || (rem - bound) % 2 != 0) return;
  for (int d = 1; d <= st.n; ++d) {
    if (d == st.k) continue;
    // Appending (k d) to the prefix strips it from the residual: res' = (k d) res.
    const int a = st.res_inv[st.k];
    const int b = st.res_inv[d];
    std::swap(st.res[a], st.res[b]);
    std::swap(st.res_inv[st.k], st.res_inv[d]);
    st.prefix.push_back(d);
    const int was_unused = st.use_count[d] == 0 ? 1 : 0;
    ++st.use_count[d];
    brute_dfs(st, depth + 1, unused - was_unused);
    --st.use_count[d];
    st.prefix.pop_back();
    std::swap(st.res[a], st.res[b]);
    std::swap(st.res_inv[st.k], st.res_inv[d]);
  }
}

}  // namespace detail

/// Exhaustive ground truth: all minimal transitive star factorizations of pi
/// with pivot k, in increasing lexicographic order of the others-sequence.
/// Depth-first over sequences of exact length n+m-2, pruning on unused-symbol
/// count and on the residual lower bound (with its parity refinement).
[[nodiscard]] inline std::vector<StarFactorization> enumerate_brute(
    const Permutation& pi, int k, std::uint64_t budget = 100'000'000) {
  if (k < 1 || k > pi.n()) throw std::invalid_argument("enumerate_brute: pivot out of range");
  std::vector<StarFactorization> out;
  detail::BruteState st;
  st.n = pi.n();
  st.k = k;
  st.target_len = minimal_length(pi);
  st.budget = budget;
  st.res.assign(st.n + 1, 0);
  st.res_inv.assign(st.n + 1, 0);
  for (int x = 1; x <= st.n; ++x) st.res[x] = pi(x);
  for (int x = 1; x <= st.n; ++x) st.res_inv[st.res[x]] = x;
  st.use_count.assign(st.n + 1, 0);
  st.out = &out;
  detail::brute_dfs(st, 0, st.n - 1);
  return out;
}

}  // namespace starfac
