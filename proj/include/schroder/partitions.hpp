#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "schroder/errors.hpp"
#include "schroder/poset.hpp"
#include "schroder/rational.hpp"
#include "schroder/trees.hpp"

namespace schroder {

// Set partition of [n] in canonical form: each block ascending, blocks sorted
// by minimum. n = 0 with no blocks is allowed (empty partition).
struct Partition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& o) const {
    if (n != o.n) return n < o.n;
    return blocks < o.blocks;
  }
};

inline void canonicalize(Partition& p) {
  for (auto& b : p.blocks) std::sort(b.begin(), b.end());
  std::sort(p.blocks.begin(), p.blocks.end());
}

inline void validate_partition(const Partition& p) {
  std::vector<char> seen(p.n + 1, 0);
  int covered = 0;
  for (const auto& b : p.blocks) {
    if (b.empty()) throw DomainError("empty block");
    for (int x : b) {
      if (x < 1 || x > p.n) throw DomainError("element out of range");
      if (seen[x]) throw DomainError("repeated element in partition");
      seen[x] = 1;
      ++covered;
    }
  }
  if (covered != p.n) throw DomainError("partition does not cover the ground set");
}

// Expects canonical form (blocks internally sorted). A block may only be
// re-entered while it is the innermost open one; anything else is a crossing.
inline bool is_noncrossing(const Partition& p) {
  std::vector<int> block_of(p.n + 1, -1);
  for (std::size_t i = 0; i < p.blocks.size(); ++i)
    for (int x : p.blocks[i]) block_of[x] = static_cast<int>(i);
  std::vector<int> open;
  for (int x = 1; x <= p.n; ++x) {
    const int b = block_of[x];
    if (x == p.blocks[b].front())
      open.push_back(b);
    else if (open.empty() || open.back() != b)
      return false;
    if (x == p.blocks[b].back()) open.pop_back();
  }
  return true;
}

struct NcPartition : Partition {
  NcPartition() = default;
  NcPartition(int ground, std::vector<std::vector<int>> bl) {
    n = ground;
    blocks = std::move(bl);
    canonicalize(*this);
    validate_partition(*this);
    if (!is_noncrossing(*this)) throw DomainError("partition is crossing");
  }
};

inline std::string partition_to_string(const Partition& p) {
  std::string s = "{";
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (i) s += '|';
    for (std::size_t j = 0; j < p.blocks[i].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(p.blocks[i][j]);
    }
  }
  s += '}';
  return s;
}

// Non-crossing partition with a total order on its blocks that extends the
// nesting order (outer blocks first along every nesting chain).
struct MonotonePartition {
  int n = 0;
  std::vector<std::vector<int>> ordered_blocks;

  bool operator==(const MonotonePartition&) const = default;
  bool operator<(const MonotonePartition& o) const {
    if (n != o.n) return n < o.n;
    return ordered_blocks < o.ordered_blocks;
  }
};

inline std::string monotone_to_string(const MonotonePartition& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.ordered_blocks.size(); ++i) {
    if (i) s += " ; ";
    for (std::size_t j = 0; j < m.ordered_blocks[i].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(m.ordered_blocks[i][j]);
    }
  }
  s += ']';
  return s;
}

namespace detail {

// Non-crossing partitions of an ordered ground set: pick the block B of the
// smallest element, then the segments between consecutive members of B and
// the tail after max B partition independently.
inline void nc_of(const std::vector<int>& ground,
                  std::vector<std::vector<std::vector<int>>>& out);

inline void nc_cross_product(const std::vector<std::vector<int>>& segments, std::size_t i,
                             std::vector<std::vector<int>>& acc,
                             std::vector<std::vector<std::vector<int>>>& out) {
  if (i == segments.size()) {
    out.push_back(acc);
    return;
  }
  std::vector<std::vector<std::vector<int>>> parts;
  nc_of(segments[i], parts);
  for (auto& p : parts) {
    const std::size_t mark = acc.size();
    acc.insert(acc.end(), p.begin(), p.end());
    nc_cross_product(segments, i + 1, acc, out);
    acc.resize(mark);
  }
}

inline void nc_of(const std::vector<int>& ground,
                  std::vector<std::vector<std::vector<int>>>& out) {
  if (ground.empty()) {
    out.push_back({});
    return;
  }
  const int m = static_cast<int>(ground.size());
  // Subsets of ground containing ground[0], as bitmasks over positions.
  for (std::uint32_t mask = 1; mask < (1u << m); mask += 2) {
    std::vector<int> first_block;
    std::vector<std::vector<int>> segments;
    std::vector<int> current;
    for (int i = 0; i < m; ++i) {
      if ((mask >> i) & 1u) {
        if (!first_block.empty()) {
          segments.push_back(current);
          current.clear();
        }
        first_block.push_back(ground[i]);
      } else {
        current.push_back(ground[i]);
      }
    }
    segments.push_back(current);  // tail after max of the first block
    std::vector<std::vector<int>> acc{first_block};
    nc_cross_product(segments, 0, acc, out);
  }
}

inline std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace detail

inline const std::vector<NcPartition>& enum_nc(int n, int cap = kDefaultEnumCap) {
  if (n < 1) throw DomainError("enum_nc needs n >= 1");
  if (n > cap) throw SizeLimitError("ground set size exceeds enumeration cap");
  static std::map<int, std::vector<NcPartition>> cache;
  std::lock_guard<std::mutex> lock(detail::cache_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<int> ground(n);
  for (int i = 0; i < n; ++i) ground[i] = i + 1;
  std::vector<std::vector<std::vector<int>>> raw;
  detail::nc_of(ground, raw);
  std::vector<NcPartition> out;
  out.reserve(raw.size());
  for (auto& blocks : raw) out.emplace_back(n, std::move(blocks));
  std::sort(out.begin(), out.end());
  return cache.emplace(n, std::move(out)).first->second;
}

// Interval (Boolean) partitions: blocks are intervals, i.e. compositions.
inline std::vector<NcPartition> enum_interval(int n, int cap = kDefaultEnumCap) {
  if (n < 1) throw DomainError("enum_interval needs n >= 1");
  if (n > cap) throw SizeLimitError("ground set size exceeds enumeration cap");
  std::vector<NcPartition> out;
  for (std::uint32_t cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> cur{1};
    for (int x = 2; x <= n; ++x) {
      if ((cuts >> (x - 2)) & 1u) {
        blocks.push_back(cur);
        cur.clear();
      }
      cur.push_back(x);
    }
    blocks.push_back(cur);
    out.emplace_back(n, std::move(blocks));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_interval_partition(const Partition& p) {
  for (const auto& b : p.blocks)
    if (b.back() - b.front() + 1 != static_cast<int>(b.size())) return false;
  return true;
}

// Nesting forest f_pi: one node per block; B' is a child of B when B is the
// tightest block with min B < min B' and max B' <= max B. Nodes are indexed
// by the canonical block order (ascending minima), so parents precede
// children. The forest is non-planar; children order is by block minimum.
struct NestingForest {
  std::vector<std::vector<int>> blocks;
  ForestPoset poset;
};

inline NestingForest nesting_forest(const NcPartition& p) {
  NestingForest f;
  f.blocks = p.blocks;
  const int m = static_cast<int>(p.blocks.size());
  f.poset.parent.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    const int lo = p.blocks[i].front(), hi = p.blocks[i].back();
    int best = -1;
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      if (p.blocks[j].front() < lo && hi < p.blocks[j].back()) {
        if (best == -1 || p.blocks[best].front() < p.blocks[j].front()) best = j;
      }
    }
    f.poset.parent[i] = best;
  }
  return f;
}

inline Integer forest_factorial(const NcPartition& p) {
  return forest_factorial(nesting_forest(p).poset);
}

// Irreducible components: one per outer block. Outer blocks span disjoint
// intervals [min B, max B] that cover the ground set; each component is the
// set of blocks inside one such interval, relabelled to start at 1. Ordered
// left to right.
inline std::vector<NcPartition> irreducible_components(const NcPartition& p) {
  const NestingForest f = nesting_forest(p);
  std::vector<std::pair<int, int>> spans;
  for (std::size_t r = 0; r < f.blocks.size(); ++r)
    if (f.poset.parent[r] == -1)
      spans.emplace_back(f.blocks[r].front(), f.blocks[r].back());
  std::sort(spans.begin(), spans.end());
  std::vector<NcPartition> out;
  for (const auto& [lo, hi] : spans) {
    std::vector<std::vector<int>> blocks;
    for (const auto& b : p.blocks)
      if (b.front() >= lo && b.back() <= hi) {
        std::vector<int> shifted;
        for (int x : b) shifted.push_back(x - lo + 1);
        blocks.push_back(std::move(shifted));
      }
    out.emplace_back(hi - lo + 1, std::move(blocks));
  }
  return out;
}

inline std::vector<MonotonePartition> enum_monotone(int n, int cap = kDefaultEnumCap) {
  std::vector<MonotonePartition> out;
  for (const auto& p : enum_nc(n, cap)) {
    const NestingForest f = nesting_forest(p);
    const int m = static_cast<int>(f.blocks.size());
    for_each_k_linearization(f.poset, m, [&](const Linearization& order) {
      MonotonePartition mp;
      mp.n = n;
      mp.ordered_blocks.resize(m);
      for (int b = 0; b < m; ++b) mp.ordered_blocks[order[b] - 1] = f.blocks[b];
      out.push_back(std::move(mp));
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

// pi(t): one block per internal vertex, the labels of its adjacent sectors.
inline NcPartition tree_to_ncp(const SchroederTree& t) {
  const TreeAnalysis a = analyze(t);
  NcPartition p;
  p.n = a.degree;
  p.blocks = a.blocks;
  canonicalize(p);
  return p;
}

inline std::vector<int> block_of_root(const SchroederTree& t) {
  if (t.is_leaf()) throw DomainError("degree-0 tree has no root block");
  return analyze(t).blocks[0];
}

// Blocks attached to v and all its skeleton descendants, v in planar ids.
inline std::vector<std::vector<int>> subtree_blocks(const SchroederTree& t, int v) {
  const TreeAnalysis a = analyze(t);
  if (v < 0 || v >= a.skeleton.size())
    throw DomainError("not an internal vertex id: " + std::to_string(v));
  std::vector<std::vector<int>> out;
  for (int w = 0; w < a.skeleton.size(); ++w)
    if (a.skeleton.is_ancestor(v, w)) out.push_back(a.blocks[w]);
  std::sort(out.begin(), out.end());
  return out;
}

// Reverse refinement: p <= s iff every block of p sits inside a block of s.
inline bool partition_leq(const Partition& p, const Partition& s) {
  if (p.n != s.n) return false;
  std::vector<int> block_of(s.n + 1, -1);
  for (std::size_t i = 0; i < s.blocks.size(); ++i)
    for (int x : s.blocks[i]) block_of[x] = static_cast<int>(i);
  for (const auto& b : p.blocks)
    for (int x : b)
      if (block_of[x] != block_of[b.front()]) return false;
  return true;
}

// Moebius function of the full partition lattice Pi(n), closed form
//   mu(p,s) = (-1)^{|p|-|s|} * prod_{B in s} (n_B - 1)!
// with n_B the number of p-blocks inside B. Not used for NC intervals.
inline Integer moebius_partition_lattice(const Partition& p, const Partition& s) {
  if (!partition_leq(p, s)) throw OrderError("p is not finer than s");
  std::vector<int> block_of(s.n + 1, -1);
  for (std::size_t i = 0; i < s.blocks.size(); ++i)
    for (int x : s.blocks[i]) block_of[x] = static_cast<int>(i);
  std::vector<int> count(s.blocks.size(), 0);
  for (const auto& b : p.blocks) ++count[block_of[b.front()]];
  Integer mu = 1;
  for (int c : count) mu *= factorial(c - 1);
  if ((p.blocks.size() - s.blocks.size()) % 2) mu = -mu;
  return mu;
}

// Moebius function of the non-crossing partition lattice, by the defining
// recursion mu(p,s) = -sum_{p <= q < s} mu(p,q), memoized. NC(n) is not a
// sublattice of Pi(n), so the closed form above does not apply.
inline Integer moebius_nc(const NcPartition& p, const NcPartition& s) {
  if (!partition_leq(p, s)) throw OrderError("p is not finer than s in NC");
  static std::map<std::pair<std::string, std::string>, Integer> memo;
  const auto key = std::make_pair(std::to_string(p.n) + partition_to_string(p),
                                  partition_to_string(s));
  {
    std::lock_guard<std::mutex> lock(detail::cache_mutex());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  Integer mu;
  if (p == s) {
    mu = 1;
  } else {
    mu = 0;
    for (const auto& q : enum_nc(p.n)) {
      if (q == s) continue;
      if (partition_leq(p, q) && partition_leq(q, s)) mu -= moebius_nc(p, q);
    }
  }
  std::lock_guard<std::mutex> lock(detail::cache_mutex());
  memo.emplace(key, mu);
  return mu;
}

inline NcPartition nc_zero(int n) {
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= n; ++i) blocks.push_back({i});
  return NcPartition(n, std::move(blocks));
}

inline NcPartition nc_one(int n) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  return NcPartition(n, {all});
}

// hat extension: prepend a new singleton in front, shifting labels by one;
// {} over [0] becomes {{1}}, and pi over [n] becomes {{1}} u (pi + 1).
inline NcPartition hat_extension(const NcPartition& p) {
  std::vector<std::vector<int>> blocks{{1}};
  for (const auto& b : p.blocks) {
    std::vector<int> shifted;
    for (int x : b) shifted.push_back(x + 1);
    blocks.push_back(std::move(shifted));
  }
  return NcPartition(p.n + 1, std::move(blocks));
}

// Number of Schroeder trees (resp. prime trees) of degree p.n whose natural
// labelling equals p, by filtering the enumeration through tree_to_ncp.
inline long count_trees_for_ncp(const NcPartition& p, int cap = kDefaultEnumCap) {
  long count = 0;
  for_each_schroder(p.n, [&](const SchroederTree& t) {
    if (tree_to_ncp(t) == p) ++count;
  }, cap);
  return count;
}

inline long count_prime_trees_for_ncp(const NcPartition& p, int cap = kDefaultEnumCap) {
  long count = 0;
  for_each_schroder(p.n, [&](const SchroederTree& t) {
    if (is_prime(t) && tree_to_ncp(t) == p) ++count;
  }, cap);
  return count;
}

}  // namespace schroder
