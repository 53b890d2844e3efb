#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "starfac/permutation.hpp"
#include "starfac/star_oracle.hpp"
#include "starfac/word_codec.hpp"

namespace starfac {

/// Rooted tree with ordered children.  label = 0 on the root, a cycle index
/// in [m] on plain nodes, hook_label(h) < 0 on hook leaves of intermediate
/// stages.  Finished trees carry no hooks.
struct TreeNode {
  int label = 0;
  std::vector<TreeNode> children;

  friend bool operator==(const TreeNode& a, const TreeNode& b) {
    return a.label == b.label && a.children == b.children;
  }
};

[[nodiscard]] constexpr int hook_label(int h) { return -(h + 1); }
[[nodiscard]] constexpr bool is_hook(int label) { return label < 0; }
[[nodiscard]] constexpr int hook_index(int label) { return -label - 1; }

/// Injection values f(1)..f(m-2) into [n+m-2] plus the index c in [l_p].
/// For m <= 2 the injection is empty; for m = 1 the whole assignment
/// degenerates to the canonical (f=(), c=1).
struct HookAssignment {
  std::vector<int> f;
  int c = 1;

  friend bool operator==(const HookAssignment& a, const HookAssignment& b) {
    return a.f == b.f && a.c == b.c;
  }
  friend bool operator<(const HookAssignment& a, const HookAssignment& b) {
    if (a.f != b.f) return a.f < b.f;
    return a.c < b.c;
  }
};

/// Length-(n+m-2) slot labels (plain or hook) plus the m-1 bar gaps; the bar
/// at gap g splits between slots g and g+1 (1-based), so the factors are the
/// maximal bar-free runs.
struct HookedSequence {
  std::vector<int> slots;
  std::vector<int> bars;
};

/// Nested "label(child child ...)" with the root printed as "*"; hook leaves
/// print as "f0", "f1", ... in intermediate stages.
[[nodiscard]] inline std::string serialize_tree(const TreeNode& node) {
  std::string out = node.label == 0
                        ? std::string("*")
                        : is_hook(node.label) ? "f" + std::to_string(hook_index(node.label))
                                              : std::to_string(node.label);
  if (!node.children.empty()) {
    out += '(';
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      if (i > 0) out += ' ';
      out += serialize_tree(node.children[i]);
    }
    out += ')';
  }
  return out;
}

/// Parses the serialize_tree format, plain labels only.
[[nodiscard]] inline TreeNode parse_tree(std::string_view text) {
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_children = [&](auto&& self, TreeNode& node) -> void {
    if (i >= text.size() || text[i] != '(') return;
    ++i;
    while (true) {
      skip_space();
      if (i < text.size() && text[i] == ')') {
        if (node.children.empty())
          throw std::invalid_argument("parse_tree: empty child list");
        ++i;
        return;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("parse_tree: expected label or ')'");
      long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 1'000'000) throw std::invalid_argument("parse_tree: label out of range");
        ++i;
      }
      if (value < 1) throw std::invalid_argument("parse_tree: label out of range");
      TreeNode child;
      child.label = static_cast<int>(value);
      self(self, child);
      node.children.push_back(std::move(child));
    }
  };
  skip_space();
  if (i >= text.size() || text[i] != '*') throw std::invalid_argument("parse_tree: expected '*'");
  ++i;
  TreeNode root;
  parse_children(parse_children, root);
  skip_space();
  if (i != text.size()) throw std::invalid_argument("parse_tree: trailing input");
  return root;
}

/// DOT digraph with preorder node ids; child order is preserved by the
/// ordering attribute and recorded on each edge as ord=i.
[[nodiscard]] inline std::string to_dot(const TreeNode& root) {
  std::string out = "digraph tree {\n  ordering=out;\n";
  int next_id = 0;
  auto emit = [&](auto&& self, const TreeNode& node) -> int {
    const int id = next_id++;
    const std::string text =
        node.label == 0 ? std::string("*")
                        : is_hook(node.label) ? "f" + std::to_string(hook_index(node.label))
                                              : std::to_string(node.label);
    out += "  n" + std::to_string(id) + " [label=\"" + text + "\"];\n";
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      const int child_id = self(self, node.children[i]);
      out += "  n" + std::to_string(id) + " -> n" + std::to_string(child_id) +
             " [ord=" + std::to_string(i + 1) + "];\n";
    }
    return id;
  };
  emit(emit, root);
  out += "}\n";
  return out;
}

/// Non-root labels in depth-first preorder, children left to right.
[[nodiscard]] inline Word preorder_word(const TreeNode& root) {
  Word w;
  auto walk = [&](auto&& self, const TreeNode& node) -> void {
    for (const TreeNode& child : node.children) {
      if (is_hook(child.label))
        throw std::invalid_argument("preorder_word: tree still carries hooks");
      w.push_back(child.label);
      self(self, child);
    }
  };
  walk(walk, root);
  return w;
}

namespace detail {

inline void check_hook_assignment(const CycleDecomposition& d, int p, const HookAssignment& h) {
  const int L = d.n() + d.m - 2;
  if (d.m == 1) {
    if (!h.f.empty() || h.c != 1)
      throw std::invalid_argument("hook assignment: single cycle admits only (f=(), c=1)");
    return;
  }
  if (static_cast<int>(h.f.size()) != d.m - 2)
    throw std::invalid_argument("hook assignment: injection has wrong arity");
  std::vector<char> seen(L + 1, 0);
  for (int value : h.f) {
    if (value < 1 || value > L) throw std::invalid_argument("hook assignment: injection value out of range");
    if (seen[value]) throw std::invalid_argument("hook assignment: injection values must be distinct");
    seen[value] = 1;
  }
  if (h.c < 1 || h.c > d.lengths[p - 1])
    throw std::invalid_argument("hook assignment: c out of range");
}

}  // namespace detail

/// Steps (1)-(4): plain labels 1^l_1 .. m^l_m fill the non-injection slots in
/// increasing order, injection slots become hooks f(1)..f(m-2), the c-th "p"
/// becomes f(0), and bars land after the rightmost i for i < p and before the
/// leftmost i for i > p (surviving plain labels only).
[[nodiscard]] inline HookedSequence build_hooked_sequence(const Permutation& pi, int k,
                                                          const HookAssignment& h) {
  const CycleDecomposition& d = pi.cycles();
  const int p = pivot_location(d, k).p;
  detail::check_hook_assignment(d, p, h);
  const int m = d.m;
  HookedSequence hs;
  if (m == 1) {
    hs.slots.assign(d.lengths[0] - 1, 1);
    return hs;
  }
  const int L = pi.n() + m - 2;
  hs.slots.assign(L, 0);
  for (int i = 1; i <= m - 2; ++i) hs.slots[h.f[i - 1] - 1] = hook_label(i);
  int label = 1, emitted = 0, p_seen = 0;
  for (int pos = 0; pos < L; ++pos) {
    if (hs.slots[pos] != 0) continue;
    while (emitted == d.lengths[label - 1]) {
      ++label;
      emitted = 0;
    }
    ++emitted;
    if (label == p && ++p_seen == h.c) {
      hs.slots[pos] = hook_label(0);
    } else {
      hs.slots[pos] = label;
    }
  }
  for (int j = 1; j <= m; ++j) {
    if (j == p) continue;
    if (j < p) {
      for (int pos = L - 1; pos >= 0; --pos) {
        if (hs.slots[pos] == j) {
          hs.bars.push_back(pos + 1);
          break;
        }
      }
    } else {
      for (int pos = 0; pos < L; ++pos) {
        if (hs.slots[pos] == j) {
          hs.bars.push_back(pos);
          break;
        }
      }
    }
  }
  std::sort(hs.bars.begin(), hs.bars.end());
  for (std::size_t i = 0; i + 1 < hs.bars.size(); ++i) {
    if (hs.bars[i] == hs.bars[i + 1])
      throw std::logic_error("build_hooked_sequence: coincident bars");
  }
  return hs;
}

namespace detail {

/// Factor j's slot labels, 1-based j, from the bar gaps.
[[nodiscard]] inline std::vector<std::vector<int>> split_factors(const HookedSequence& hs, int m) {
  std::vector<std::vector<int>> factors(m + 1);
  int factor = 1;
  std::size_t bar = 0;
  for (int pos = 0; pos < static_cast<int>(hs.slots.size()); ++pos) {
    while (bar < hs.bars.size() && hs.bars[bar] == pos) {
      ++factor;
      ++bar;
    }
    factors[factor].push_back(hs.slots[pos]);
  }
  while (bar < hs.bars.size()) {
    ++factor;
    ++bar;
  }
  if (factor > m) throw std::logic_error("split_factors: more factors than cycles");
  return factors;
}

}  // namespace detail

/// Steps (5)-(8): saplings from the factors, the attachment loop driven by the
/// hooks, then the positional pairing of leftover ornaments with leftover
/// hooks.  The result carries no hooks.
[[nodiscard]] inline TreeNode tree_forward(const Permutation& pi, int k,
                                           const HookAssignment& h) {
  const CycleDecomposition& d = pi.cycles();
  const int p = pivot_location(d, k).p;
  const int m = d.m;
  const HookedSequence hs = build_hooked_sequence(pi, k, h);
  TreeNode root;
  if (m == 1) {
    for (int slot : hs.slots) root.children.push_back(TreeNode{slot, {}});
    return root;
  }
  const auto factors = detail::split_factors(hs, m);
  std::vector<int> hook_home(m - 1, 0);  // hook h lives in factor hook_home[h]
  for (int j = 1; j <= m; ++j) {
    for (int slot : factors[j]) {
      if (is_hook(slot)) hook_home[hook_index(slot)] = j;
    }
  }
  std::vector<int> attach_map(m - 1, 0);  // hook h -> ornament attached there
  std::vector<char> attached(m + 1, 0);
  attached[p] = 1;
  for (int i = 1; i <= m - 2; ++i) {
    const int j = hook_home[i];
    if (!attached[j]) {
      attach_map[i - 1] = j;
      attached[j] = 1;
    }
  }
  std::vector<int> leftover_ornaments, leftover_hooks;
  for (int j = 1; j <= m; ++j) {
    if (!attached[j]) leftover_ornaments.push_back(j);
  }
  for (int hk = 0; hk <= m - 2; ++hk) {
    if (attach_map[hk] == 0) leftover_hooks.push_back(hk);
  }
  if (leftover_ornaments.size() != leftover_hooks.size())
    throw std::logic_error("tree_forward: ornament/hook count mismatch");
  for (std::size_t t = 0; t < leftover_hooks.size(); ++t)
    attach_map[leftover_hooks[t]] = leftover_ornaments[t];
  std::vector<char> built(m + 1, 0);
  auto materialize = [&](auto&& self, int j, int label) -> TreeNode {
    if (built[j]) throw std::logic_error("tree_forward: attachment cycle");
    built[j] = 1;
    TreeNode node{label, {}};
    for (int slot : factors[j]) {
      if (is_hook(slot)) {
        const int target = attach_map[hook_index(slot)];
        node.children.push_back(self(self, target, target));
      } else {
        node.children.push_back(TreeNode{slot, {}});
      }
    }
    return node;
  };
  root = materialize(materialize, p, 0);
  for (int j = 1; j <= m; ++j) {
    if (!built[j]) throw std::logic_error("tree_forward: detached ornament");
  }
  return root;
}

namespace detail {

struct SaplingView {
  const TreeNode* root = nullptr;  // the tree root for rank p
  int parent_rank = 0;             // 0 for the pivot sapling
  std::vector<int> sheltered;      // ranks, in child order
};

/// Class membership: label multiset, every leaf under its own sapling root,
/// exactly one sapling root per non-pivot rank.  Fills one view per rank.
inline std::vector<SaplingView> decompose_saplings(const Permutation& pi, int k,
                                                   const TreeNode& root) {
  const CycleDecomposition& d = pi.cycles();
  const int m = d.m;
  const int p = pivot_location(d, k).p;
  if (root.label != 0) throw std::invalid_argument("tree: root must be unlabeled");
  std::vector<SaplingView> views(m + 1);
  views[p].root = &root;
  std::vector<int> leaf_count(m + 1, 0);
  auto walk = [&](auto&& self, const TreeNode& node, int rank) -> void {
    for (const TreeNode& child : node.children) {
      if (is_hook(child.label) || child.label < 1 || child.label > m)
        throw std::invalid_argument("tree: node label out of range");
      if (child.children.empty()) {
        if (child.label != rank)
          throw std::invalid_argument("tree: leaf label differs from its sapling");
        ++leaf_count[rank];
      } else {
        const int j = child.label;
        if (j == p) throw std::invalid_argument("tree: interior node carries the pivot rank");
        if (views[j].root != nullptr)
          throw std::invalid_argument("tree: duplicate sapling root");
        views[j].root = &child;
        views[j].parent_rank = rank;
        views[rank].sheltered.push_back(j);
        self(self, child, j);
      }
    }
  };
  walk(walk, root, p);
  for (int j = 1; j <= m; ++j) {
    if (views[j].root == nullptr) throw std::invalid_argument("tree: missing sapling");
    const int expect = j == p ? d.lengths[j - 1] - 1 : d.lengths[j - 1];
    if (leaf_count[j] != expect)
      throw std::invalid_argument("tree: wrong leaf count for a sapling");
  }
  return views;
}

}  // namespace detail

/// Inverse of tree_forward on its image: ranks the saplings, relabels the
/// non-pivot roots along the shelter chains to the free saplings (free
/// saplings by increasing rank, labeled roots skipped) as f(0)..f(m-2),
/// concatenates each root's children labels by increasing rank, and reads f
/// from the hook positions and c from the count of plain p's before f(0).
[[nodiscard]] inline HookAssignment tree_inverse(const Permutation& pi, int k,
                                                 const TreeNode& root) {
  const CycleDecomposition& d = pi.cycles();
  const int m = d.m;
  const int p = pivot_location(d, k).p;
  const auto views = detail::decompose_saplings(pi, k, root);
  if (m == 1) return HookAssignment{{}, 1};
  std::vector<int> tag(m + 1, -1);  // sapling rank -> hook index
  int next_tag = 0;
  std::vector<int> free_ranks;
  for (int j = 1; j <= m; ++j) {
    if (views[j].sheltered.empty()) free_ranks.push_back(j);
  }
  for (int f_rank : free_ranks) {
    std::vector<int> path;
    for (int j = f_rank; j != p; j = views[j].parent_rank) path.push_back(j);
    std::reverse(path.begin(), path.end());
    for (int j : path) {
      if (tag[j] == -1) tag[j] = next_tag++;
    }
  }
  if (next_tag != m - 1) throw std::logic_error("tree_inverse: hook relabeling incomplete");
  HookAssignment h;
  h.f.assign(m - 2, 0);
  int pos = 0, f0_pos = 0, plain_p_before = 0;
  for (int j = 1; j <= m; ++j) {
    for (const TreeNode& child : views[j].root->children) {
      ++pos;
      if (child.children.empty()) {
        if (child.label == p && f0_pos == 0) ++plain_p_before;
      } else {
        const int t = tag[child.label];
        if (t == 0) {
          f0_pos = pos;
        } else {
          h.f[t - 1] = pos;
        }
      }
    }
  }
  if (f0_pos == 0) throw std::logic_error("tree_inverse: f(0) not located");
  for (int value : h.f) {
    if (value == 0) throw std::logic_error("tree_inverse: hook position not located");
  }
  h.c = plain_p_before + 1;
  return h;
}

/// All members of the tree class: T_p first, then every T_i inserted, in every
/// order, as a new child at every position under the root or a sapling root.
/// Deduplicated structurally; sorted by serialization.
[[nodiscard]] inline std::vector<TreeNode> enumerate_trees(const Permutation& pi, int k,
                                                           std::uint64_t budget = 100'000'000) {
  const CycleDecomposition& d = pi.cycles();
  const int m = d.m;
  const int p = pivot_location(d, k).p;
  TreeNode start;
  for (int t = 0; t < d.lengths[p - 1] - 1; ++t) start.children.push_back(TreeNode{p, {}});
  std::map<std::string, TreeNode> level{{serialize_tree(start), start}};
  std::uint64_t steps = 0;
  for (int round = 0; round < m - 1; ++round) {
    std::map<std::string, TreeNode> next_level;
    for (const auto& [key, tree] : level) {
      std::vector<char> present(m + 1, 0);
      auto scan = [&](auto&& self, const TreeNode& node) -> void {
        for (const TreeNode& child : node.children) {
          if (!child.children.empty()) present[child.label] = 1;
          self(self, child);
        }
      };
      scan(scan, tree);
      for (int j = 1; j <= m; ++j) {
        if (j == p || present[j]) continue;
        TreeNode sapling{j, {}};
        for (int t = 0; t < d.lengths[j - 1]; ++t) sapling.children.push_back(TreeNode{j, {}});
        // Targets: the root plus every node that already has children, each
        // addressed by its child-index path so the insertion can copy the tree.
        std::vector<std::vector<int>> target_paths;
        auto collect = [&](auto&& self, const TreeNode& node, std::vector<int>& path,
                           bool is_root) -> void {
          if (is_root || !node.children.empty()) target_paths.push_back(path);
          for (std::size_t ci = 0; ci < node.children.size(); ++ci) {
            if (node.children[ci].children.empty()) continue;
            path.push_back(static_cast<int>(ci));
            self(self, node.children[ci], path, false);
            path.pop_back();
          }
        };
        std::vector<int> path;
        collect(collect, tree, path, true);
        for (const auto& tpath : target_paths) {
          const TreeNode* node = &tree;
          for (int ci : tpath) node = &node->children[ci];
          for (std::size_t gap = 0; gap <= node->children.size(); ++gap) {
            if (++steps > budget) throw BudgetExceeded("enumerate_trees: step budget exceeded");
            TreeNode candidate = tree;
            TreeNode* spot = &candidate;
            for (int ci : tpath) spot = &spot->children[ci];
            spot->children.insert(spot->children.begin() + gap, sapling);
            next_level.emplace(serialize_tree(candidate), std::move(candidate));
          }
        }
      }
    }
    level = std::move(next_level);
  }
  std::vector<TreeNode> out;
  out.reserve(level.size());
  for (auto& [key, tree] : level) out.push_back(std::move(tree));
  return out;
}

/// The full (f, c) domain in lexicographic order (f lex ascending, then c).
[[nodiscard]] inline std::vector<HookAssignment> enumerate_hook_domain(const Permutation& pi,
                                                                       int k) {
  const CycleDecomposition& d = pi.cycles();
  const int m = d.m;
  const int p = pivot_location(d, k).p;
  if (m == 1) return {HookAssignment{{}, 1}};
  const int L = pi.n() + m - 2;
  std::vector<HookAssignment> out;
  std::vector<int> f;
  std::vector<char> used(L + 1, 0);
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(f.size()) == m - 2) {
      for (int c = 1; c <= d.lengths[p - 1]; ++c) out.push_back(HookAssignment{f, c});
      return;
    }
    for (int value = 1; value <= L; ++value) {
      if (used[value]) continue;
      used[value] = 1;
      f.push_back(value);
      self(self);
      f.pop_back();
      used[value] = 0;
    }
  };
  extend(extend);
  return out;
}

/// Association from each preorder word to every hook assignment producing it,
/// over the full (f, c) domain; assignment lists keep domain order.
[[nodiscard]] inline std::map<Word, std::vector<HookAssignment>> forward_word_table(
    const Permutation& pi, int k) {
  std::map<Word, std::vector<HookAssignment>> table;
  for (const HookAssignment& h : enumerate_hook_domain(pi, k))
    table[preorder_word(tree_forward(pi, k, h))].push_back(h);
  return table;
}

/// All hook assignments whose tree has preorder word w; may be empty or hold
/// several entries, both reportable outcomes.
[[nodiscard]] inline std::vector<HookAssignment> word_preimages(const Permutation& pi, int k,
                                                                const Word& w) {
  if (!is_valid_word(w, pi, k)) throw std::invalid_argument("word_preimages: invalid word");
  const auto table = forward_word_table(pi, k);
  const auto it = table.find(w);
  return it == table.end() ? std::vector<HookAssignment>{} : it->second;
}

}  // namespace starfac
