#pragma once

#include <cctype>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace starfac {

/// Cycle decomposition in standard form: every element of [n] appears in
/// exactly one cycle, each cycle starts at its minimum, cycles are sorted by
/// increasing minima, and fixed points are present as 1-cycles.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;
  std::vector<int> lengths;  // lengths[i] == cycles[i].size()
  int m = 0;                 // cycle count, fixed points included

  [[nodiscard]] int n() const {
    return std::accumulate(lengths.begin(), lengths.end(), 0);
  }
};

/// Location of an element inside a standard-form decomposition.
/// Both fields are 1-based: cycles[p-1][pos-1] is the element.
struct PivotLocation {
  int p = 0;
  int pos = 0;
};

/// A permutation of [n] = {1, ..., n}.  Elements are 1-based everywhere.
/// Values are immutable after construction and safe to share across threads;
/// the standard form is computed once at construction.
class Permutation {
 public:
  /// Builds from a one-line image: image[x-1] is where x maps to.
  explicit Permutation(std::vector<int> image) {
    const int n = static_cast<int>(image.size());
    if (n < 1) throw std::invalid_argument("permutation: ground set must be nonempty");
    img_.assign(n + 1, 0);
    std::vector<char> seen(n + 1, 0);
    for (int x = 1; x <= n; ++x) {
      const int y = image[x - 1];
      if (y < 1 || y > n) throw std::invalid_argument("permutation: image value out of range");
      if (seen[y]) throw std::invalid_argument("permutation: image is not a bijection");
      seen[y] = 1;
      img_[x] = y;
    }
    build_standard_form();
  }

  [[nodiscard]] static Permutation identity(int n) {
    if (n < 1) throw std::invalid_argument("permutation: ground set must be nonempty");
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 1);
    return Permutation(std::move(image));
  }

  [[nodiscard]] int n() const { return static_cast<int>(img_.size()) - 1; }

  /// Applies the permutation to x in [n].
  [[nodiscard]] int operator()(int x) const {
    if (x < 1 || x > n()) throw std::invalid_argument("permutation: argument out of range");
    return img_[x];
  }

  [[nodiscard]] const CycleDecomposition& cycles() const { return decomposition_; }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.img_ < b.img_;
  }

 private:
  void build_standard_form() {
    const int size = n();
    std::vector<char> visited(size + 1, 0);
    for (int start = 1; start <= size; ++start) {
      if (visited[start]) continue;
      std::vector<int> cycle;
      int x = start;
      do {
        visited[x] = 1;
        cycle.push_back(x);
        x = img_[x];
      } while (x != start);
      decomposition_.lengths.push_back(static_cast<int>(cycle.size()));
      decomposition_.cycles.push_back(std::move(cycle));
    }
    decomposition_.m = static_cast<int>(decomposition_.cycles.size());
  }

  std::vector<int> img_;  // img_[0] unused, img_[x] = pi(x)
  CycleDecomposition decomposition_;
};

/// Standard-form decomposition of pi.
[[nodiscard]] inline const CycleDecomposition& standard_form(const Permutation& pi) {
  return pi.cycles();
}

/// Parses whitespace-tolerant cycle notation over [n], e.g. "(4 2 1)(6)(3 5)".
/// Elements absent from the text are fixed points.  Throws on a repeated
/// element, an element outside [n], or malformed parentheses.
[[nodiscard]] inline Permutation parse_cycles(std::string_view text, int n) {
  if (n < 1) throw std::invalid_argument("parse_cycles: ground set must be nonempty");
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  std::vector<char> seen(n + 1, 0);

  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("parse_cycles: expected '('");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("parse_cycles: expected element or ')'");
      long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > n) throw std::invalid_argument("parse_cycles: element out of range");
        ++i;
      }
      const int element = static_cast<int>(value);
      if (element < 1) throw std::invalid_argument("parse_cycles: element out of range");
      if (seen[element]) throw std::invalid_argument("parse_cycles: repeated element");
      seen[element] = 1;
      cycle.push_back(element);
    }
    if (cycle.empty()) throw std::invalid_argument("parse_cycles: empty cycle");
    for (std::size_t j = 0; j + 1 < cycle.size(); ++j) image[cycle[j] - 1] = cycle[j + 1];
    image[cycle.back() - 1] = cycle.front();
    skip_space();
  }
  return Permutation(std::move(image));
}

/// Standard-form cycle text: "(a b c)" per cycle, single spaces between
/// elements, cycles concatenated, fixed points emitted.
[[nodiscard]] inline std::string format_cycles(const CycleDecomposition& d) {
  std::string out;
  for (const auto& cycle : d.cycles) {
    out += '(';
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(cycle[j]);
    }
    out += ')';
  }
  return out;
}

[[nodiscard]] inline std::string format_cycles(const Permutation& pi) {
  return format_cycles(standard_form(pi));
}

/// Composition a after b: result(x) = a(b(x)).
[[nodiscard]] inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> image(a.n());
  for (int x = 1; x <= a.n(); ++x) image[x - 1] = a(b(x));
  return Permutation(std::move(image));
}

/// Locates k inside a standard-form decomposition.
[[nodiscard]] inline PivotLocation pivot_location(const CycleDecomposition& d, int k) {
  if (k < 1 || k > d.n()) throw std::invalid_argument("pivot_location: element out of range");
  for (int ci = 0; ci < d.m; ++ci) {
    const auto& cycle = d.cycles[ci];
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      if (cycle[j] == k) return PivotLocation{ci + 1, static_cast<int>(j + 1)};
    }
  }
  throw std::logic_error("pivot_location: element missing from decomposition");
}

/// x(x-1)...(x-r+1) = x!/(x-r)!; the empty product for r = 0.
[[nodiscard]] inline std::uint64_t falling_factorial(std::uint64_t x, std::uint64_t r) {
  if (r > 0 && r > x) throw std::invalid_argument("falling_factorial: r exceeds x");
  std::uint64_t result = 1;
  for (std::uint64_t t = 0; t < r; ++t) result *= x - t;
  return result;
}

}  // namespace starfac
