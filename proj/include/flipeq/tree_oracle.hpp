#pragma once

#include <deque>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flipeq/exact_int.hpp"

namespace flipeq {

// Ordered rooted binary tree node, colored 0 (white) or 1 (black).
// The empty tree is the null pointer.
struct colored_tree {
  const colored_tree* left = nullptr;
  const colored_tree* right = nullptr;
  int color = 0;
};

using tree_ref = const colored_tree*;

inline int node_count(tree_ref t) {
  return t ? 1 + node_count(t->left) + node_count(t->right) : 0;
}

inline int black_count(tree_ref t) {
  return t ? t->color + black_count(t->left) + black_count(t->right) : 0;
}

// Flip-equivalence with matching node colors: empty matches empty, colors
// must agree, children match either straight or crossed.
inline bool two_color_iso(tree_ref a, tree_ref b) {
  if (a == nullptr && b == nullptr) return true;
  if (a == nullptr || b == nullptr) return false;
  if (a->color != b->color) return false;
  if (two_color_iso(a->right, b->right) && two_color_iso(a->left, b->left)) return true;
  if (two_color_iso(a->right, b->left) && two_color_iso(a->left, b->right)) return true;
  return false;
}

// Totally ordered encoding of a tree's flip-equivalence class: recursively
// (color, min(child codes), max(child codes)), parenthesized so
// concatenation stays unambiguous. Equal codes <=> two_color_iso.
struct canonical_code {
  std::string bytes;
  friend auto operator<=>(const canonical_code&, const canonical_code&) = default;
};

namespace detail {
inline std::string encode_tree(tree_ref t) {
  if (!t) return {};
  std::string a = encode_tree(t->left);
  std::string b = encode_tree(t->right);
  if (b < a) a.swap(b);
  std::string out;
  out.reserve(a.size() + b.size() + 3);
  out.push_back('(');
  out.push_back(char('0' + t->color));
  out += a;
  out += b;
  out.push_back(')');
  return out;
}
}  // namespace detail

inline canonical_code canonical_form(tree_ref t) { return {detail::encode_tree(t)}; }

// Number of nodes whose two child subtrees (empty allowed) are not
// two_color_iso to each other. The class of a tree with count l holds
// exactly 2^l ordered trees.
inline int noniso_sibling_count(tree_ref t) {
  if (!t) return 0;
  return noniso_sibling_count(t->left) + noniso_sibling_count(t->right) +
         (two_color_iso(t->left, t->right) ? 0 : 1);
}

// Owns nodes built incrementally; handy for tests and mirrors.
class tree_builder {
 public:
  tree_ref node(tree_ref left, tree_ref right, int color = 0) {
    arena_.push_back(colored_tree{left, right, color});
    return &arena_.back();
  }
  tree_ref leaf(int color = 0) { return node(nullptr, nullptr, color); }

 private:
  std::deque<colored_tree> arena_;
};

inline tree_ref mirror(tree_ref t, tree_builder& b) {
  if (!t) return nullptr;
  return b.node(mirror(t->right, b), mirror(t->left, b), t->color);
}

// All ordered binary tree shapes of each size up to nmax, structurally
// shared, all white. Deterministic order: by left-subtree size, then left
// shape index, then right shape index.
class shape_catalog {
 public:
  explicit shape_catalog(int nmax) {
    if (nmax < 0) throw usage_error("shape_catalog: negative nmax");
    by_size_.resize(nmax + 1);
    by_size_[0] = {nullptr};
    for (int n = 1; n <= nmax; ++n) {
      for (int k = 0; k <= n - 1; ++k) {
        for (tree_ref l : by_size_[k]) {
          for (tree_ref r : by_size_[n - 1 - k]) {
            arena_.push_back(colored_tree{l, r, 0});
            by_size_[n].push_back(&arena_.back());
          }
        }
      }
    }
  }

  int nmax() const { return int(by_size_.size()) - 1; }

  const std::vector<tree_ref>& shapes(int n) const {
    if (n < 0 || n > nmax()) throw usage_error("shape_catalog: size out of range");
    return by_size_[n];
  }

 private:
  std::deque<colored_tree> arena_;
  std::vector<std::vector<tree_ref>> by_size_;
};

// Enumeration caps. Full censuses stay in the low millions of trees at the
// defaults; callers may raise them.
struct oracle_limits {
  int max_nodes_plain = 12;
  int max_nodes_colored = 9;
};

namespace detail {
// Preorder copy of a shape into a contiguous buffer (pointers into `buf`,
// which must be pre-reserved). Returns the new node, null for empty.
inline colored_tree* flatten_shape(tree_ref t, std::vector<colored_tree>& buf) {
  if (!t) return nullptr;
  buf.push_back(colored_tree{});
  colored_tree* n = &buf.back();
  n->left = flatten_shape(t->left, buf);
  n->right = flatten_shape(t->right, buf);
  return n;
}
}  // namespace detail

// Visit every ordered tree with n nodes once, in deterministic order. With
// colors = 2, all 2^n colorings of each shape are visited (bit p of the
// coloring mask is the color of the node with preorder index p) and the
// tree passed to `fn` is transient: it must not be retained.
template <typename F>
void enumerate_trees(int n, int colors, F&& fn, const oracle_limits& limits = {}) {
  if (n < 0) throw usage_error("enumerate_trees: negative n");
  if (colors != 1 && colors != 2) throw usage_error("enumerate_trees: colors must be 1 or 2");
  const int cap = colors == 1 ? limits.max_nodes_plain : limits.max_nodes_colored;
  if (n > cap) {
    throw usage_error("enumerate_trees: n=" + std::to_string(n) + " above cap " +
                      std::to_string(cap));
  }
  shape_catalog catalog(n);
  if (colors == 1) {
    for (tree_ref s : catalog.shapes(n)) fn(s);
    return;
  }
  std::vector<colored_tree> buf;
  buf.reserve(size_t(n));
  for (tree_ref s : catalog.shapes(n)) {
    buf.clear();
    tree_ref root = detail::flatten_shape(s, buf);
    const unsigned long masks = 1uL << n;
    for (unsigned long mask = 0; mask < masks; ++mask) {
      for (int p = 0; p < n; ++p) buf[size_t(p)].color = int((mask >> p) & 1u);
      fn(root);
    }
  }
}

inline ExactInt count_trees(int n, int colors, const oracle_limits& limits = {}) {
  ExactInt c = 0;
  enumerate_trees(n, colors, [&](tree_ref) { ++c; }, limits);
  return c;
}

struct census_row {
  ExactInt class_count = 0;
  ExactInt ordered_tree_count = 0;
};

// Exhaustive grouping of all ordered (optionally colored) trees by
// flip-equivalence class, tallied per (l, c).
struct class_census {
  int n = 0;
  int colors = 1;
  std::map<std::pair<int, int>, census_row> rows;  // key (l, c)

  ExactInt class_count(int l, int c = 0) const {
    auto it = rows.find({l, c});
    return it == rows.end() ? ExactInt(0) : it->second.class_count;
  }
  ExactInt total_classes() const {
    ExactInt t = 0;
    for (const auto& [key, row] : rows) t += row.class_count;
    return t;
  }
  ExactInt total_ordered_trees() const {
    ExactInt t = 0;
    for (const auto& [key, row] : rows) t += row.ordered_tree_count;
    return t;
  }
};

inline class_census census(int n, int colors, const oracle_limits& limits = {}) {
  struct class_info {
    ExactInt size = 0;
    int l = -1;
    int c = -1;
  };
  std::unordered_map<std::string, class_info> classes;
  enumerate_trees(
      n, colors,
      [&](tree_ref t) {
        const int l = noniso_sibling_count(t);
        const int c = black_count(t);
        class_info& info = classes[detail::encode_tree(t)];
        if (info.l < 0) {
          info.l = l;
          info.c = c;
        } else if (info.l != l || info.c != c) {
          throw integrity_error("census: (l, c) not constant within a class at n=" +
                                std::to_string(n));
        }
        ++info.size;
      },
      limits);

  class_census out;
  out.n = n;
  out.colors = colors;
  for (const auto& [code, info] : classes) {
    if (info.size != pow2(info.l)) {
      throw integrity_error("census: class of size " + info.size.str() + " but l=" +
                            std::to_string(info.l) + " at n=" + std::to_string(n));
    }
    census_row& row = out.rows[{info.l, info.c}];
    row.class_count += 1;
    row.ordered_tree_count += info.size;
  }
  return out;
}

}  // namespace flipeq
