#include <algorithm>
#include <cctype>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "starfac/permutation.hpp"
#include "starfac/pivot_bijection.hpp"
#include "starfac/star_oracle.hpp"
#include "starfac/tree_codec.hpp"
#include "starfac/word_codec.hpp"

namespace {

// Ground-set size: the explicit --n when given, else the largest element
// mentioned in the cycle text.
int resolve_n(const std::string& perm_text, int n_flag) {
  if (n_flag != 0) return n_flag;
  int best = 0;
  long value = 0;
  bool in_number = false;
  for (char ch : perm_text + " ") {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      value = value * 10 + (ch - '0');
      if (value > 1'000'000) throw std::invalid_argument("permutation: element out of range");
      in_number = true;
    } else if (in_number) {
      best = std::max(best, static_cast<int>(value));
      value = 0;
      in_number = false;
    }
  }
  if (best == 0)
    throw std::invalid_argument("cannot infer the ground-set size; pass --n");
  return best;
}

std::vector<int> parse_int_list(const std::string& text, const char* who) {
  std::vector<int> values;
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  while (i < text.size()) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument(std::string(who) + ": expected integer list");
    long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000) throw std::invalid_argument(std::string(who) + ": value out of range");
      ++i;
    }
    values.push_back(static_cast<int>(value));
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size()) {
      if (text[i] != ',') throw std::invalid_argument(std::string(who) + ": expected ','");
      ++i;
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i == text.size()) throw std::invalid_argument(std::string(who) + ": trailing ','");
    }
  }
  return values;
}

// Odometer over the non-pivot coordinate boxes [l'_1] x ... x [l'_(m-1)].
std::vector<starfac::EnclosureChoice> all_choices(const starfac::Permutation& pi, int k) {
  const auto& d = pi.cycles();
  const int p = starfac::pivot_location(d, k).p;
  std::vector<int> lengths;
  for (int j = 1; j <= d.m; ++j) {
    if (j != p) lengths.push_back(d.lengths[j - 1]);
  }
  std::vector<starfac::EnclosureChoice> out;
  starfac::EnclosureChoice c(lengths.size(), 1);
  while (true) {
    out.push_back(c);
    int slot = static_cast<int>(c.size()) - 1;
    while (slot >= 0 && c[slot] == lengths[slot]) {
      c[slot] = 1;
      --slot;
    }
    if (slot < 0) break;
    ++c[slot];
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal transitive star factorizations: enumeration, word and tree encodings, pivot translation"};
  app.require_subcommand(1);

  std::string perm_text, fac_text, word_text, f_text, c_text, tree_text;
  std::string tree_format = "text", render_format = "dot";
  int n_flag = 0, pivot = 0, from = 0, to = 0;
  std::uint64_t budget = 100'000'000ULL;
  bool oracle = false, force_lex = false;

  auto add_perm = [&](CLI::App* cmd) {
    cmd->add_option("--perm", perm_text,
                    "Permutation in cycle notation; omitted elements are fixed points")
        ->required();
    cmd->add_option("--n", n_flag, "Ground-set size; inferred from --perm when omitted");
  };
  auto add_pivot = [&](CLI::App* cmd) {
    cmd->add_option("--pivot", pivot, "Pivot element")->required();
  };
  auto add_fac = [&](CLI::App* cmd) {
    cmd->add_option("--fac", fac_text, "Star factorization, e.g. \"(3 5)(3 4)\"")->required();
  };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget", budget, "Search step budget");
  };

  CLI::App* cmd_count = app.add_subcommand("count", "Count the minimal transitive star factorizations");
  add_perm(cmd_count);
  add_pivot(cmd_count);
  add_budget(cmd_count);
  cmd_count->add_flag("--oracle", oracle, "Count by exhaustive search instead of the formula");

  CLI::App* cmd_enumerate = app.add_subcommand("enumerate", "List every factorization, one per line");
  add_perm(cmd_enumerate);
  add_pivot(cmd_enumerate);
  add_budget(cmd_enumerate);
  cmd_enumerate->add_flag("--oracle", oracle, "Enumerate by exhaustive search instead of word substitution");

  CLI::App* cmd_word = app.add_subcommand("word", "Word of a factorization");
  add_perm(cmd_word);
  add_pivot(cmd_word);
  add_fac(cmd_word);

  CLI::App* cmd_enclosures = app.add_subcommand("enclosures", "Cycle enclosures of a factorization");
  add_perm(cmd_enclosures);
  add_pivot(cmd_enclosures);
  add_fac(cmd_enclosures);

  CLI::App* cmd_rho = app.add_subcommand("rho", "Factorization from a word and enclosure choices");
  add_perm(cmd_rho);
  add_pivot(cmd_rho);
  cmd_rho->add_option("--word", word_text, "Word over cycle indices")->required();
  cmd_rho->add_option("--c", c_text, "Comma-separated enclosure choices, one per non-pivot cycle");

  CLI::App* cmd_rho_inv = app.add_subcommand("rho-inv", "Word and enclosure choices of a factorization");
  add_perm(cmd_rho_inv);
  add_pivot(cmd_rho_inv);
  add_fac(cmd_rho_inv);

  CLI::App* cmd_tree = app.add_subcommand("tree", "Tree of a hook assignment");
  add_perm(cmd_tree);
  add_pivot(cmd_tree);
  cmd_tree->add_option("--f", f_text, "Comma-separated injection values f(1),f(2),...");
  cmd_tree->add_option("--c", c_text, "Index into the pivot cycle")->required();
  cmd_tree->add_option("--format", tree_format, "Output format")
      ->check(CLI::IsMember({"text", "dot"}));

  CLI::App* cmd_tree_inv = app.add_subcommand("tree-inv", "Hook assignment of a tree");
  add_perm(cmd_tree_inv);
  add_pivot(cmd_tree_inv);
  cmd_tree_inv->add_option("tree", tree_text, "Tree in nested form, e.g. \"*(2 1(1 1 3(3) 1))\"")
      ->required();

  CLI::App* cmd_phi = app.add_subcommand("phi", "Factorization of a full coordinate");
  add_perm(cmd_phi);
  add_pivot(cmd_phi);
  cmd_phi->add_option("--f", f_text, "Comma-separated injection values f(1),f(2),...");
  cmd_phi->add_option("--c", c_text, "Comma-separated coordinates c_1,...,c_m")->required();

  CLI::App* cmd_phi_inv = app.add_subcommand("phi-inv", "Full coordinate of a factorization");
  add_perm(cmd_phi_inv);
  add_pivot(cmd_phi_inv);
  add_fac(cmd_phi_inv);
  cmd_phi_inv->add_flag("--force-lexicographic", force_lex,
                        "On an ambiguous word, take the least hook assignment instead of failing");

  CLI::App* cmd_translate = app.add_subcommand("translate", "Carry a factorization to another pivot");
  add_perm(cmd_translate);
  cmd_translate->add_option("--from", from, "Source pivot")->required();
  cmd_translate->add_option("--to", to, "Target pivot")->required();
  add_fac(cmd_translate);
  cmd_translate->add_flag("--force-lexicographic", force_lex,
                          "On an ambiguous word, take the least hook assignment instead of failing");

  CLI::App* cmd_audit = app.add_subcommand("audit", "Cross-check every construction against the oracle");
  add_perm(cmd_audit);
  add_pivot(cmd_audit);
  add_budget(cmd_audit);

  CLI::App* cmd_render = app.add_subcommand("render", "Render a tree");
  cmd_render->add_option("tree", tree_text, "Tree in nested form")->required();
  cmd_render->add_option("--format", render_format, "Output format")
      ->check(CLI::IsMember({"text", "dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (cmd_render->parsed()) {
      const starfac::TreeNode tree = starfac::parse_tree(tree_text);
      if (render_format == "dot") {
        std::cout << starfac::to_dot(tree);
      } else {
        std::cout << starfac::serialize_tree(tree) << "\n";
      }
      return 0;
    }

    const int n = resolve_n(perm_text, n_flag);
    const starfac::Permutation pi = starfac::parse_cycles(perm_text, n);
    const int m = pi.cycles().m;

    if (cmd_count->parsed()) {
      const std::uint64_t count = oracle ? starfac::enumerate_brute(pi, pivot, budget).size()
                                         : starfac::count_formula(pi, pivot);
      std::cout << count << "\n";
    } else if (cmd_enumerate->parsed()) {
      std::vector<std::string> lines;
      if (oracle) {
        for (const auto& fac : starfac::enumerate_brute(pi, pivot, budget))
          lines.push_back(starfac::format_factorization(fac));
      } else {
        for (const auto& w : starfac::enumerate_valid_words(pi, pivot)) {
          for (const auto& c : all_choices(pi, pivot))
            lines.push_back(starfac::format_factorization(starfac::rho(pi, pivot, w, c)));
        }
      }
      std::sort(lines.begin(), lines.end());
      for (const auto& line : lines) std::cout << line << "\n";
    } else if (cmd_word->parsed()) {
      const auto fac = starfac::parse_factorization(fac_text, n, pivot);
      std::cout << starfac::format_word(starfac::word_of(fac, pi), m) << "\n";
    } else if (cmd_enclosures->parsed()) {
      const auto fac = starfac::parse_factorization(fac_text, n, pivot);
      const starfac::Enclosures enc = starfac::enclosures_of(fac, pi);
      std::cout << "letters=" << starfac::format_int_list(enc.letters) << "\n";
      std::cout << "choice=" << starfac::format_int_list(enc.choice) << "\n";
    } else if (cmd_rho->parsed()) {
      const starfac::Word w = starfac::parse_word(word_text, m);
      const auto c = parse_int_list(c_text, "rho --c");
      std::cout << starfac::format_factorization(starfac::rho(pi, pivot, w, c)) << "\n";
    } else if (cmd_rho_inv->parsed()) {
      const auto fac = starfac::parse_factorization(fac_text, n, pivot);
      const auto [w, c] = starfac::rho_inv(pi, pivot, fac);
      std::cout << "word=" << starfac::format_word(w, m) << "\n";
      std::cout << "choice=" << starfac::format_int_list(c) << "\n";
    } else if (cmd_tree->parsed()) {
      const auto c_values = parse_int_list(c_text, "tree --c");
      if (c_values.size() != 1)
        throw std::invalid_argument("tree: --c takes exactly one value");
      const starfac::HookAssignment h{parse_int_list(f_text, "tree --f"), c_values[0]};
      const starfac::TreeNode tree = starfac::tree_forward(pi, pivot, h);
      if (tree_format == "dot") {
        std::cout << starfac::to_dot(tree);
      } else {
        std::cout << starfac::serialize_tree(tree) << "\n";
      }
    } else if (cmd_tree_inv->parsed()) {
      const starfac::TreeNode tree = starfac::parse_tree(tree_text);
      const starfac::HookAssignment h = starfac::tree_inverse(pi, pivot, tree);
      std::cout << "f=" << starfac::format_int_list(h.f) << "\n";
      std::cout << "c=" << h.c << "\n";
    } else if (cmd_phi->parsed()) {
      const starfac::PhiInput input{parse_int_list(f_text, "phi --f"),
                                    parse_int_list(c_text, "phi --c")};
      std::cout << starfac::format_factorization(starfac::phi(pi, pivot, input)) << "\n";
    } else if (cmd_phi_inv->parsed()) {
      const auto fac = starfac::parse_factorization(fac_text, n, pivot);
      starfac::PhiInput input;
      if (force_lex) {
        const starfac::ForcedPreimage forced = starfac::phi_inv_lexicographic(pi, pivot, fac);
        if (!forced.unique) {
          std::cerr << "warning: " << forced.preimage_count
                    << " hook-assignment preimages; using the lexicographically least\n";
        }
        input = forced.input;
      } else {
        input = starfac::phi_inv(pi, pivot, fac);
      }
      std::cout << "f=" << starfac::format_int_list(input.f) << "\n";
      std::cout << "c=" << starfac::format_int_list(input.c) << "\n";
    } else if (cmd_translate->parsed()) {
      const auto fac = starfac::parse_factorization(fac_text, n, from);
      starfac::StarFactorization result;
      if (force_lex) {
        auto [translated, forced] = starfac::translate_lexicographic(pi, from, to, fac);
        if (!forced.unique) {
          std::cerr << "warning: " << forced.preimage_count
                    << " hook-assignment preimages; using the lexicographically least\n";
        }
        result = translated;
      } else {
        result = starfac::translate(pi, from, to, fac);
      }
      std::cout << starfac::format_factorization(result) << "\n";
    } else if (cmd_audit->parsed()) {
      std::cout << starfac::format_audit(pi, starfac::audit(pi, pivot, budget));
    }
    return 0;
  } catch (const starfac::AmbiguousPreimage& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& witness : e.witnesses)
      std::cerr << "witness " << starfac::format_hook_assignment(witness) << "\n";
    return 2;
  } catch (const starfac::MissingPreimage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
