#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "schroder/errors.hpp"
#include "schroder/rational.hpp"

namespace schroder {

// Forest-shaped poset (the order is the ancestor relation, roots are minimal).
// Vertices are 0..size()-1 and every parent index is smaller than its child,
// so vertex order is already a linear extension. Skeletons of planar trees
// store their vertices in planar (pre-order) rank here; nesting forests sort
// their nodes by block minimum, which also puts parents first.
struct ForestPoset {
  std::vector<int> parent;  // parent[v] < v, or -1 for roots

  int size() const { return static_cast<int>(parent.size()); }

  bool is_ancestor(int a, int d) const {
    while (d != -1 && d != a) d = parent[d];
    return d == a;
  }

  std::vector<std::vector<int>> children() const {
    std::vector<std::vector<int>> ch(parent.size());
    for (int v = 0; v < size(); ++v)
      if (parent[v] != -1) ch[parent[v]].push_back(v);
    return ch;
  }

  bool operator==(const ForestPoset&) const = default;
};

inline void validate_forest(const ForestPoset& p) {
  for (int v = 0; v < p.size(); ++v)
    if (p.parent[v] < -1 || p.parent[v] >= v)
      throw DomainError("forest poset parents must precede children");
}

// A k-linearization assigns level[v] in 1..k, strictly increasing along
// edges, with every level hit. level.size() == poset size.
using Linearization = std::vector<int>;

inline bool is_k_linearization(const ForestPoset& p, const Linearization& f, int k) {
  if (static_cast<int>(f.size()) != p.size()) return false;
  std::vector<char> hit(k + 1, 0);
  for (int v = 0; v < p.size(); ++v) {
    if (f[v] < 1 || f[v] > k) return false;
    if (p.parent[v] != -1 && f[p.parent[v]] >= f[v]) return false;
    hit[f[v]] = 1;
  }
  for (int j = 1; j <= k; ++j)
    if (!hit[j]) return false;
  return true;
}

namespace detail {

// Number of ways to peel `mask` (an up-set of the poset) into exactly j
// nonempty antichain layers, top layer first. A layer must be a subset of the
// maximal elements of what remains, otherwise two comparable vertices would
// share a level.
inline Integer peel_count(const ForestPoset& p, std::uint32_t mask, int j,
                          std::map<std::pair<std::uint32_t, int>, Integer>& memo) {
  if (mask == 0) return j == 0 ? 1 : 0;
  if (j <= 0) return 0;
  auto it = memo.find({mask, j});
  if (it != memo.end()) return it->second;

  // Maximal elements of mask: vertices with no child inside mask.
  std::uint32_t maximal = mask;
  for (int v = 0; v < p.size(); ++v)
    if ((mask >> v) & 1u) {
      if (p.parent[v] != -1 && ((mask >> p.parent[v]) & 1u))
        maximal &= ~(1u << p.parent[v]);
    }

  Integer total = 0;
  // All nonempty subsets of the maximal antichain.
  for (std::uint32_t sub = maximal; sub != 0; sub = (sub - 1) & maximal)
    total += peel_count(p, mask & ~sub, j - 1, memo);
  memo[{mask, j}] = total;
  return total;
}

}  // namespace detail

// Down-set dynamic program; exhaustive enumeration is kept in the test suite
// as an oracle. Returns 0 outside 1 <= k <= size (there is nothing to count).
inline Integer count_k_linearizations(const ForestPoset& p, int k) {
  if (p.size() > 30) throw SizeLimitError("poset too large for linearization counting");
  if (k < 1 || k > p.size()) return 0;
  if (p.size() == 0) return 0;
  std::map<std::pair<std::uint32_t, int>, Integer> memo;
  return detail::peel_count(p, (p.size() == 32 ? ~0u : (1u << p.size()) - 1u), k, memo);
}

inline void for_each_k_linearization(const ForestPoset& p, int k,
                                     const std::function<void(const Linearization&)>& fn) {
  if (k < 1 || k > p.size()) return;
  Linearization f(p.size(), 0);
  std::vector<int> level_count(k + 1, 0);
  // Vertices are topologically sorted, so parents already carry a level.
  std::function<void(int)> rec = [&](int v) {
    if (v == p.size()) {
      for (int j = 1; j <= k; ++j)
        if (level_count[j] == 0) return;
      fn(f);
      return;
    }
    const int lo = p.parent[v] == -1 ? 1 : f[p.parent[v]] + 1;
    for (int lvl = lo; lvl <= k; ++lvl) {
      f[v] = lvl;
      ++level_count[lvl];
      rec(v + 1);
      --level_count[lvl];
    }
    f[v] = 0;
  };
  rec(0);
}

inline std::vector<Linearization> enumerate_k_linearizations(const ForestPoset& p, int k) {
  std::vector<Linearization> out;
  for_each_k_linearization(p, k, [&](const Linearization& f) { out.push_back(f); });
  return out;
}

inline Integer count_linear_extensions(const ForestPoset& p) {
  return count_k_linearizations(p, p.size());
}

// Murua's coefficient of the (non-planar) rooted forest:
//   omega(p) = sum_{k=1}^{|p|} (-1)^{k-1}/k * #(k-linearizations).
inline Rational murua_coefficient(const ForestPoset& p) {
  Rational omega = 0;
  for (int k = 1; k <= p.size(); ++k) {
    Rational term(count_k_linearizations(p, k), Integer(k));
    term.canonicalize();
    omega += (k % 2 == 1) ? term : -term;
  }
  return omega;
}

// Tree factorial of the subtree rooted at v: |t| * product over children.
// On a chain of m vertices this is m!.
inline Integer tree_factorial(const ForestPoset& p, int root,
                              const std::vector<std::vector<int>>& children,
                              Integer* subtree_size = nullptr) {
  Integer size = 1, fact = 1;
  for (int c : children[root]) {
    Integer sub_size;
    fact *= tree_factorial(p, c, children, &sub_size);
    size += sub_size;
  }
  if (subtree_size) *subtree_size = size;
  return size * fact;
}

// Product of the tree factorials of all component trees.
inline Integer forest_factorial(const ForestPoset& p) {
  const auto ch = p.children();
  Integer f = 1;
  for (int v = 0; v < p.size(); ++v)
    if (p.parent[v] == -1) f *= tree_factorial(p, v, ch);
  return f;
}

}  // namespace schroder
