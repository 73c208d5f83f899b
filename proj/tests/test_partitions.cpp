#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "schroder/partitions.hpp"
#include "schroder/trees.hpp"

using namespace schroder;

namespace {

// All set partitions of [n] via restricted growth strings.
std::vector<Partition> enum_set_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      Partition p;
      p.n = n;
      p.blocks.assign(used, {});
      for (int j = 0; j < n; ++j) p.blocks[rgs[j]].push_back(j + 1);
      canonicalize(p);
      out.push_back(p);
      return;
    }
    for (int b = 0; b <= used; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

// Generic Moebius recursion on an explicit poset, as an oracle.
template <typename Elem>
Integer brute_moebius(const Elem& p, const Elem& s, const std::vector<Elem>& all,
                      const std::function<bool(const Elem&, const Elem&)>& leq) {
  if (p == s) return 1;
  Integer sum = 0;
  for (const auto& q : all)
    if (leq(p, q) && leq(q, s) && !(q == s)) sum += brute_moebius(p, q, all, leq);
  return -sum;
}

const SchroederTree kBigTree = parse_tree("(o,((o,o,o),o),o,(o,(o,o,o,o)))");

}  // namespace

TEST_CASE("partition text forms") {
  NcPartition p(6, {{2, 3}, {1, 5, 6}, {4}});
  CHECK(partition_to_string(p) == "{1,5,6|2,3|4}");
  MonotonePartition m;
  m.n = 6;
  m.ordered_blocks = {{2, 3}, {1, 5, 6}, {4}};
  CHECK(monotone_to_string(m) == "[2,3 ; 1,5,6 ; 4]");
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(NcPartition(4, {{1, 3}, {2, 4}}), DomainError);
  CHECK_THROWS_AS(NcPartition(3, {{1, 2}}), DomainError);
  CHECK_THROWS_AS(NcPartition(3, {{1, 2, 2}, {3}}), DomainError);
  CHECK(is_noncrossing(NcPartition(4, {{1, 4}, {2, 3}})));
  Partition crossing;
  crossing.n = 4;
  crossing.blocks = {{1, 3}, {2, 4}};
  CHECK_FALSE(is_noncrossing(crossing));
}

TEST_CASE("non-crossing and interval enumeration sizes") {
  CHECK(enum_nc(1).size() == 1);
  CHECK(enum_nc(3).size() == 5);
  CHECK(enum_interval(3).size() == 4);
  for (int n = 1; n <= 6; ++n) {
    CHECK(Integer(static_cast<long>(enum_nc(n).size())) == catalan(n));
    CHECK(enum_interval(n).size() == (1u << (n - 1)));
    const auto all = enum_set_partitions(n);
    long nc = 0;
    long interval = 0;
    for (const auto& p : all) {
      nc += is_noncrossing(p);
      interval += is_interval_partition(p);
    }
    CHECK(static_cast<std::size_t>(nc) == enum_nc(n).size());
    CHECK(static_cast<std::size_t>(interval) == enum_interval(n).size());
    for (const auto& p : enum_interval(n)) CHECK(is_interval_partition(p));
  }
}

TEST_CASE("monotone enumeration counts linear extensions") {
  CHECK(enum_monotone(1).size() == 1);
  CHECK(enum_monotone(2).size() == 3);
  CHECK(enum_monotone(3).size() == 12);
  for (int n = 1; n <= 6; ++n) {
    Integer expect = 0;
    for (const auto& p : enum_nc(n))
      expect += count_linear_extensions(nesting_forest(p).poset);
    CHECK(Integer(static_cast<long>(enum_monotone(n).size())) == expect);
  }
  for (const auto& m : enum_monotone(4)) {
    NcPartition p(m.n, m.ordered_blocks);
    const NestingForest f = nesting_forest(p);
    std::map<std::vector<int>, int> order;
    for (std::size_t i = 0; i < m.ordered_blocks.size(); ++i) {
      auto b = m.ordered_blocks[i];
      std::sort(b.begin(), b.end());
      order[b] = static_cast<int>(i);
    }
    for (int v = 0; v < f.poset.size(); ++v)
      if (f.poset.parent[v] != -1)
        CHECK(order[f.blocks[f.poset.parent[v]]] < order[f.blocks[v]]);
  }
}

TEST_CASE("tree to non-crossing partition") {
  for (int arms = 2; arms <= 5; ++arms)
    CHECK(tree_to_ncp(make_corolla(arms)) == nc_one(arms - 1));
  CHECK(tree_to_ncp(kBigTree) ==
        NcPartition(10, {{1, 5, 6}, {2, 3}, {4}, {7}, {8, 9, 10}}));
  CHECK(tree_to_ncp(parse_tree("((o,o),o)")) == NcPartition(2, {{1}, {2}}));
  CHECK(block_of_root(parse_tree("((o,o),o)")) == std::vector<int>{2});
  CHECK(block_of_root(kBigTree) == std::vector<int>{1, 5, 6});
  CHECK(block_of_root(make_corolla(4)) == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(block_of_root(make_leaf()), DomainError);
}

TEST_CASE("subtree blocks") {
  const auto blocks = subtree_blocks(kBigTree, 1);
  CHECK(blocks == std::vector<std::vector<int>>{{2, 3}, {4}});
  CHECK(subtree_blocks(kBigTree, 3) ==
        std::vector<std::vector<int>>{{7}, {8, 9, 10}});
  CHECK(subtree_blocks(kBigTree, 0).size() == 5);
  CHECK_THROWS_AS(subtree_blocks(kBigTree, 5), DomainError);
}

TEST_CASE("tree to ncp is onto, and bijective from boolean trees to intervals") {
  for (int n = 1; n <= 6; ++n) {
    std::set<NcPartition> image;
    for (const auto& t : enum_schroder(n)) image.insert(tree_to_ncp(t));
    CHECK(image.size() == enum_nc(n).size());
  }
  for (int n = 1; n <= 8; ++n) {
    std::set<NcPartition> image;
    long boolean = 0;
    for_each_schroder(n, [&](const SchroederTree& t) {
      if (!is_boolean(t)) return;
      ++boolean;
      const NcPartition p = tree_to_ncp(t);
      CHECK(is_interval_partition(p));
      image.insert(p);
    });
    CHECK(Integer(boolean) == Integer(1) << (n - 1));
    CHECK(static_cast<long>(image.size()) == boolean);
  }
}

TEST_CASE("nesting forest shapes") {
  CHECK(nesting_forest(nc_one(5)).poset.parent == std::vector<int>{-1});

  const NcPartition pi(10, {{1, 9, 10}, {2, 3}, {4, 5, 8}, {6, 7}});
  const NestingForest f = nesting_forest(pi);
  REQUIRE(f.blocks ==
          std::vector<std::vector<int>>{{1, 9, 10}, {2, 3}, {4, 5, 8}, {6, 7}});
  CHECK(f.poset.parent == std::vector<int>{-1, 0, 0, 2});
  CHECK(irreducible_components(pi).size() == 1);

  const NcPartition sigma(8, {{1, 3}, {2}, {4, 5, 8}, {6}, {7}});
  const NestingForest g = nesting_forest(sigma);
  CHECK(g.poset.parent == std::vector<int>{-1, 0, -1, 2, 2});
  const auto comps = irreducible_components(sigma);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == NcPartition(3, {{1, 3}, {2}}));
  CHECK(comps[1] == NcPartition(5, {{1, 2, 5}, {3}, {4}}));
}

TEST_CASE("forest factorial of nesting forests") {
  CHECK(forest_factorial(nc_one(3)) == 1);
  CHECK(forest_factorial(NcPartition(2, {{1}, {2}})) == 1);
  CHECK(forest_factorial(NcPartition(6, {{1, 6}, {2, 3}, {4, 5}})) == 3);
  CHECK(forest_factorial(NcPartition(4, {{1, 4}, {2, 3}})) == 2);
}

TEST_CASE("moebius function of the set partition lattice") {
  const auto all = enum_set_partitions(4);
  const std::function<bool(const Partition&, const Partition&)> leq = partition_leq;
  for (const auto& p : all)
    for (const auto& s : all) {
      if (!partition_leq(p, s)) continue;
      CHECK(moebius_partition_lattice(p, s) == brute_moebius(p, s, all, leq));
    }
  Partition zero3;
  zero3.n = 3;
  zero3.blocks = {{1}, {2}, {3}};
  Partition one3;
  one3.n = 3;
  one3.blocks = {{1, 2, 3}};
  CHECK(moebius_partition_lattice(zero3, one3) == 2);
  CHECK(moebius_partition_lattice(zero3, zero3) == 1);
  Partition zero2;
  zero2.n = 2;
  zero2.blocks = {{1}, {2}};
  Partition one2;
  one2.n = 2;
  one2.blocks = {{1, 2}};
  CHECK(moebius_partition_lattice(zero2, one2) == -1);
  CHECK_THROWS_AS(moebius_partition_lattice(one3, zero3), OrderError);
}

TEST_CASE("moebius function of the non-crossing lattice") {
  CHECK(moebius_nc(nc_zero(3), nc_zero(3)) == 1);
  CHECK(moebius_nc(nc_zero(3), nc_one(3)) == 2);
  CHECK(moebius_nc(nc_zero(4), nc_one(4)) == -5);
  CHECK_THROWS_AS(moebius_nc(nc_one(3), nc_zero(3)), OrderError);
  CHECK_THROWS_AS(
      moebius_nc(NcPartition(4, {{1, 2}, {3, 4}}), NcPartition(4, {{1, 4}, {2, 3}})),
      OrderError);

  for (int n = 1; n <= 5; ++n) {
    const auto& all = enum_nc(n);
    for (const auto& s : all) {
      Integer sum = 0;
      for (const auto& q : all)
        if (partition_leq(q, s)) sum += moebius_nc(q, s);
      CHECK(sum == (s == nc_zero(n) ? 1 : 0));
    }
  }
}

TEST_CASE("moebius values on full intervals match the Catalan formula") {
  for (int n = 1; n <= 6; ++n) {
    Integer expect = catalan(n - 1);
    if (n % 2 == 0) expect = -expect;
    CHECK(moebius_nc(nc_zero(n), nc_one(n)) == expect);
  }
}

TEST_CASE("hat extension") {
  NcPartition empty;
  CHECK(hat_extension(empty) == NcPartition(1, {{1}}));
  CHECK(hat_extension(NcPartition(2, {{1, 2}})) == NcPartition(3, {{1}, {2, 3}}));
  CHECK(hat_extension(NcPartition(2, {{1}, {2}})) ==
        NcPartition(3, {{1}, {2}, {3}}));
}

TEST_CASE("tree counts per partition match moebius magnitudes") {
  CHECK(count_trees_for_ncp(nc_one(4)) == 1);
  CHECK(count_prime_trees_for_ncp(nc_zero(3)) == 2);
  CHECK(count_trees_for_ncp(NcPartition(2, {{1}, {2}})) == 2);
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : enum_nc(n)) {
      Integer prime = moebius_nc(p, nc_one(n));
      Integer trees = moebius_nc(hat_extension(p), nc_one(n + 1));
      CHECK(Integer(count_prime_trees_for_ncp(p)) == abs(prime));
      CHECK(Integer(count_trees_for_ncp(p)) == abs(trees));
    }
}
