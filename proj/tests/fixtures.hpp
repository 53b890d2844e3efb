#pragma once

#include <starfac/permutation.hpp>
#include <starfac/star_oracle.hpp>
#include <starfac/word_codec.hpp>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace fixtures {

/// The running example used throughout the suite: (1 4 2)(3 5)(6) in S_6.
inline starfac::Permutation running_example() {
  return starfac::parse_cycles("(1 4 2)(3 5)(6)", 6);
}

/// Independently transcribed catalog of all 42 minimal transitive star
/// factorizations of (1 4 2)(3 5)(6) with pivot 3, one digit per non-pivot
/// factor element, in no particular order.
inline const std::vector<std::string> kCatalogDigits42 = {
    "5661241", "5662412", "5664124", "6651241", "6652412", "6654124",
    "6612415", "6624125", "6641245", "5612416", "5624126", "5641246",
    "6124165", "6241265", "6412465", "5166241", "5266412", "5466124",
    "1662415", "2664125", "4661245", "5126641", "5246612", "5416624",
    "1266415", "2466125", "4166245", "5124661", "5241662", "5412664",
    "1246615", "2416625", "4126645", "5124166", "5241266", "5412466",
    "1241566", "2412566", "4124566", "1241665", "2412665", "4124665",
};

/// The 14 distinct cycle-rank words of those 42 factorizations.
inline const std::vector<std::string> kWordDigits14 = {
    "2331111", "3321111", "3311112", "2311113", "3111132", "2133111",
    "1331112", "2113311", "1133112", "2111331", "1113312", "2111133",
    "1111233", "1111332",
};

inline starfac::StarFactorization fac_from_digits(int n, int k, const std::string& digits) {
  starfac::StarFactorization fac{n, k, {}};
  for (char ch : digits) fac.others.push_back(ch - '0');
  return fac;
}

inline starfac::Word word_from_digits(const std::string& digits) {
  starfac::Word w;
  for (char ch : digits) w.push_back(ch - '0');
  return w;
}

/// Every image table of S_n, for sweep tests.
inline std::vector<std::vector<int>> all_images(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

/// Reference enumeration with no pruning at all: every sequence over
/// [n] minus {k} of the given length whose product is pi and whose factors
/// cover [n] minus {k}.  Exponential; for tiny n only.
inline std::vector<starfac::StarFactorization> enumerate_reference(const starfac::Permutation& pi,
                                                                   int k, int length) {
  const int n = pi.n();
  std::vector<int> symbols;
  for (int x = 1; x <= n; ++x) {
    if (x != k) symbols.push_back(x);
  }
  std::vector<starfac::StarFactorization> out;
  const auto base = static_cast<std::uint64_t>(symbols.size());
  if (base == 0) {
    starfac::StarFactorization fac{n, k, {}};
    if (length == 0 && starfac::evaluate(fac) == pi && starfac::is_transitive(fac))
      out.push_back(fac);
    return out;
  }
  std::uint64_t total = 1;
  for (int t = 0; t < length; ++t) total *= base;
  for (std::uint64_t code = 0; code < total; ++code) {
    starfac::StarFactorization fac{n, k, std::vector<int>(length, 0)};
    std::uint64_t rest = code;
    for (int t = 0; t < length; ++t) {
      fac.others[t] = symbols[rest % base];
      rest /= base;
    }
    if (starfac::evaluate(fac) == pi && starfac::is_transitive(fac)) out.push_back(fac);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fixtures
