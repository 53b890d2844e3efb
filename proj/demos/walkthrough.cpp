// End-to-end tour on one permutation: counts, a factorization's word and
// enclosures, the tree of a hook assignment, phi, and a pivot change.
#include <iostream>

#include "starfac/permutation.hpp"
#include "starfac/pivot_bijection.hpp"
#include "starfac/star_oracle.hpp"
#include "starfac/tree_codec.hpp"
#include "starfac/word_codec.hpp"

int main() {
  using namespace starfac;
  const Permutation pi = parse_cycles("(1 4 2)(3 5)(6)", 6);
  const int k = 3;
  std::cout << "permutation " << format_cycles(pi) << ", pivot " << k << "\n";
  std::cout << "minimal length " << minimal_length(pi) << ", count " << count_formula(pi, k)
            << "\n\n";

  const StarFactorization fac = parse_factorization("(3 5)(3 4)(3 1)(3 2)(3 6)(3 6)(3 4)", 6, k);
  std::cout << "factorization " << format_factorization(fac) << "\n";
  std::cout << "word " << format_word(word_of(fac, pi), pi.cycles().m) << "\n";
  const Enclosures enc = enclosures_of(fac, pi);
  std::cout << "enclosure letters " << format_int_list(enc.letters) << ", choice "
            << format_int_list(enc.choice) << "\n\n";

  const HookAssignment h{{3}, 2};
  const TreeNode tree = tree_forward(pi, k, h);
  std::cout << "tree of (f=3, c=2): " << serialize_tree(tree) << "\n";
  std::cout << "its word " << format_word(preorder_word(tree), pi.cycles().m) << "\n";
  const HookAssignment back = tree_inverse(pi, k, tree);
  std::cout << "recovered " << format_hook_assignment(back) << "\n\n";

  const StarFactorization via_phi = phi(pi, k, PhiInput{{3}, {2, 2, 1}});
  std::cout << "phi(f=3; c=2,2,1) = " << format_factorization(via_phi) << "\n";
  const StarFactorization moved = translate(pi, k, 1, fac);
  std::cout << "same factorization at pivot 1: " << format_factorization(moved) << "\n";
  return 0;
}
