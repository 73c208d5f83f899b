#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "schroder/errors.hpp"
#include "schroder/poset.hpp"
#include "schroder/rational.hpp"

namespace schroder {

inline constexpr int kDefaultEnumCap = 10;

// Planar rooted tree whose internal vertices all have >= 2 children.
// Degree n = #leaves - 1; Sch(0) is the single leaf.
struct SchroederTree {
  std::vector<SchroederTree> children;

  bool is_leaf() const { return children.empty(); }

  int leaf_count() const {
    if (is_leaf()) return 1;
    int n = 0;
    for (const auto& c : children) n += c.leaf_count();
    return n;
  }

  int degree() const { return leaf_count() - 1; }

  int internal_count() const {
    if (is_leaf()) return 0;
    int n = 1;
    for (const auto& c : children) n += c.internal_count();
    return n;
  }

  int vertex_count() const {
    int n = 1;
    for (const auto& c : children) n += c.vertex_count();
    return n;
  }

  bool operator==(const SchroederTree&) const = default;
};

// Structural order that coincides with lexicographic order on the textual
// grammar below (internal nodes sort before leaves because '(' < 'o').
inline int compare(const SchroederTree& a, const SchroederTree& b) {
  if (a.is_leaf() || b.is_leaf()) {
    if (a.is_leaf() && b.is_leaf()) return 0;
    return a.is_leaf() ? 1 : -1;
  }
  const std::size_t m = std::min(a.children.size(), b.children.size());
  for (std::size_t i = 0; i < m; ++i)
    if (int c = compare(a.children[i], b.children[i]); c != 0) return c;
  if (a.children.size() != b.children.size())
    return a.children.size() < b.children.size() ? -1 : 1;
  return 0;
}

inline bool operator<(const SchroederTree& a, const SchroederTree& b) {
  return compare(a, b) < 0;
}

inline bool is_valid_schroder(const SchroederTree& t) {
  if (t.is_leaf()) return true;
  if (t.children.size() < 2) return false;
  return std::all_of(t.children.begin(), t.children.end(), is_valid_schroder);
}

inline SchroederTree make_leaf() { return {}; }

inline SchroederTree make_corolla(int arms) {
  if (arms < 2) throw DomainError("corolla needs at least 2 leaves");
  SchroederTree t;
  t.children.assign(arms, SchroederTree{});
  return t;
}

// Grammar: tree := 'o' | '(' tree (',' tree)+ ')'
inline std::string serialize_tree(const SchroederTree& t) {
  if (t.is_leaf()) return "o";
  std::string s = "(";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) s += ',';
    s += serialize_tree(t.children[i]);
  }
  s += ')';
  return s;
}

namespace detail {

inline SchroederTree parse_tree_at(const std::string& s, std::size_t& pos) {
  if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
  if (s[pos] == 'o') {
    ++pos;
    return make_leaf();
  }
  if (s[pos] != '(') throw ParseError("expected 'o' or '('", pos);
  ++pos;
  SchroederTree t;
  t.children.push_back(parse_tree_at(s, pos));
  while (pos < s.size() && s[pos] == ',') {
    ++pos;
    t.children.push_back(parse_tree_at(s, pos));
  }
  if (pos >= s.size() || s[pos] != ')')
    throw ParseError("expected ',' or ')'", pos);
  if (t.children.size() < 2)
    throw ParseError("internal vertex needs at least 2 children", pos);
  ++pos;
  return t;
}

}  // namespace detail

inline SchroederTree parse_tree(const std::string& s) {
  std::size_t pos = 0;
  SchroederTree t = detail::parse_tree_at(s, pos);
  if (pos != s.size()) throw ParseError("trailing input after tree", pos);
  return t;
}

namespace detail {

// Backtracking enumeration: assembles every tree of the requested degree once
// in a shared workspace and hands it to the sink. Memory stays O(tree size).
struct TreeEnumerator {
  const std::function<void(const SchroederTree&)>& sink;

  void trees_of_degree(int n, SchroederTree& slot, const std::function<void()>& done) {
    if (n == 0) {
      slot = SchroederTree{};
      done();
      return;
    }
    // Root with k children of degrees d_1..d_k, sum d_i = n+1-k.
    for (int k = 2; k <= n + 1; ++k) {
      slot.children.assign(k, SchroederTree{});
      fill_slot(0, k, n + 1 - k, slot, done);
    }
    slot.children.clear();
  }

  void fill_slot(int i, int k, int remaining, SchroederTree& node,
                 const std::function<void()>& done) {
    if (i == k - 1) {
      trees_of_degree(remaining, node.children[i], done);
      return;
    }
    for (int d = 0; d <= remaining; ++d) {
      const int next = i + 1, rest = remaining - d;
      trees_of_degree(d, node.children[i],
                      [&, next, rest] { fill_slot(next, k, rest, node, done); });
    }
  }
};

}  // namespace detail

inline void for_each_schroder(int n, const std::function<void(const SchroederTree&)>& fn,
                              int cap = kDefaultEnumCap) {
  if (n < 0) throw DomainError("negative degree");
  if (n > cap) throw SizeLimitError("degree " + std::to_string(n) +
                                    " exceeds enumeration cap " + std::to_string(cap));
  SchroederTree workspace;
  detail::TreeEnumerator e{fn};
  e.trees_of_degree(n, workspace, [&] { fn(workspace); });
}

// Exhaustive, duplicate-free, sorted in canonical string order.
inline std::vector<SchroederTree> enum_schroder(int n, int cap = kDefaultEnumCap) {
  std::vector<SchroederTree> out;
  for_each_schroder(n, [&](const SchroederTree& t) { out.push_back(t); }, cap);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<SchroederTree> enum_schroder_by_k(int n, int k, int cap = kDefaultEnumCap) {
  if (n >= 1 && (k < 1 || k > n))
    throw DomainError("internal vertex count k must lie in [1, n]");
  if (n == 0 && k != 0) throw DomainError("degree 0 has only the 0-internal-vertex tree");
  std::vector<SchroederTree> out;
  for_each_schroder(n, [&](const SchroederTree& t) {
    if (t.internal_count() == k) out.push_back(t);
  }, cap);
  std::sort(out.begin(), out.end());
  return out;
}

// Prime: the leftmost subtree of the root is a leaf. Boolean: every internal
// vertex has only leaf children except possibly its leftmost child.
// Both are vacuously false on the degree-0 tree.
inline bool is_prime(const SchroederTree& t) {
  if (t.is_leaf()) return false;
  return t.children.front().is_leaf();
}

inline bool is_boolean(const SchroederTree& t) {
  if (t.is_leaf()) return false;
  for (std::size_t i = 1; i < t.children.size(); ++i)
    if (!t.children[i].is_leaf()) return false;
  return t.children.front().is_leaf() || is_boolean(t.children.front());
}

// Skeleton and natural labelling, computed in one traversal.
//
// Internal vertices get ids 0..i(t)-1 in planar order (pre-order, children
// left to right); planar rank of vertex v is v+1. blocks[v] lists the sector
// labels adjacent to v: sectors are numbered 1..degree in the left-to-right
// bottom-to-top total order, which an in-order walk realizes (between two
// consecutive children of v, all sectors of the left child come first, then
// the sector at v, then the right child's sectors).
struct TreeAnalysis {
  int degree = 0;
  ForestPoset skeleton;                  // planar pre-order ids
  std::vector<std::vector<int>> blocks;  // per internal vertex, ascending
};

inline TreeAnalysis analyze(const SchroederTree& t) {
  TreeAnalysis a;
  a.degree = t.degree();
  int next_sector = 0;
  auto enter = [&](int parent_id) {
    a.skeleton.parent.push_back(parent_id);
    a.blocks.emplace_back();
    return static_cast<int>(a.skeleton.parent.size()) - 1;
  };
  // enter() on first touch gives planar pre-order ids; emitting the sector at
  // v between consecutive children, after the left child's recursion, gives
  // the in-order sector labels. blocks[v] comes out ascending.
  std::function<void(const SchroederTree&, int)> inorder = [&](const SchroederTree& node,
                                                               int id) {
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      const SchroederTree& c = node.children[i];
      if (!c.is_leaf()) inorder(c, enter(id));
      if (i + 1 < node.children.size()) a.blocks[id].push_back(++next_sector);
    }
  };
  if (!t.is_leaf()) inorder(t, enter(-1));
  return a;
}

inline ForestPoset skeleton(const SchroederTree& t) { return analyze(t).skeleton; }

// Whole-tree factorial, leaves included: |t| * prod over child subtrees.
inline Integer tree_factorial(const SchroederTree& t) {
  Integer f = t.vertex_count();
  for (const auto& c : t.children) f *= tree_factorial(c);
  return f;
}

inline Rational murua_coefficient(const SchroederTree& t) {
  if (t.is_leaf()) throw DomainError("murua coefficient needs degree >= 1");
  return murua_coefficient(skeleton(t));
}

// The unique ascent-free i(t)-linearization of sk(t): mirrored pre-order,
// i.e. visit the root, then the child subtrees from right to left.
inline Linearization ascent_free_linearization(const SchroederTree& t) {
  if (t.is_leaf()) throw DomainError("ascent-free linearization needs degree >= 1");
  const ForestPoset sk = skeleton(t);
  const auto ch = sk.children();
  Linearization level(sk.size(), 0);
  int next = 0;
  std::function<void(int)> visit = [&](int v) {
    level[v] = ++next;
    for (auto it = ch[v].rbegin(); it != ch[v].rend(); ++it) visit(*it);
  };
  visit(0);
  return level;
}

// A bijective linearization g has an ascent at level j when the vertex at
// level j is neither the parent of the vertex at level j + 1 nor to its right
// in the planar order. Exactly one ascent-free g exists per skeleton, the
// mirrored pre-order.
inline bool is_ascent_free(const ForestPoset& sk, const Linearization& g) {
  const int m = sk.size();
  std::vector<int> order(m, -1);
  for (int v = 0; v < m; ++v) order[g[v] - 1] = v;
  for (int j = 0; j + 1 < m; ++j) {
    const int a = order[j];
    const int b = order[j + 1];
    if (sk.parent[b] != a && a < b) return false;
  }
  return true;
}

}  // namespace schroder
