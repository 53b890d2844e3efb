// Audits every pivot of one permutation and prints the reports back to back.
// Usage: audit_sweep ["(1 4 2)(3 5)(6)"] [n]
#include <iostream>
#include <string>

#include "starfac/permutation.hpp"
#include "starfac/pivot_bijection.hpp"

int main(int argc, char** argv) {
  using namespace starfac;
  try {
    const std::string text = argc > 1 ? argv[1] : "(1 4 2)(3 5)(6)";
    const int n = argc > 2 ? std::stoi(argv[2]) : 6;
    const Permutation pi = parse_cycles(text, n);
    for (int k = 1; k <= pi.n(); ++k) {
      std::cout << "== " << format_cycles(pi) << " pivot " << k << " ==\n";
      std::cout << format_audit(pi, audit(pi, k));
    }
  } catch (const std::exception& e) {
    std::cerr << "audit_sweep: " << e.what() << "\n"
              << "usage: audit_sweep [\"(1 4 2)(3 5)(6)\"] [n]\n";
    return 1;
  }
  return 0;
}
