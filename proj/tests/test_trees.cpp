#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "schroder/poset.hpp"
#include "schroder/trees.hpp"

using namespace schroder;

namespace {

// Independent count oracle: (n+1)a(n) = (6n-3)a(n-1) - (n-2)a(n-2).
std::vector<long> schroder_recurrence(int max_n) {
  std::vector<long> a{1, 1};
  for (int n = 2; n <= max_n; ++n) {
    const long num = (6L * n - 3) * a[n - 1] - (n - 2L) * a[n - 2];
    REQUIRE(num % (n + 1) == 0);
    a.push_back(num / (n + 1));
  }
  return a;
}

long count_degree(int n) {
  long c = 0;
  for_each_schroder(n, [&](const SchroederTree&) { ++c; });
  return c;
}

// Exhaustive map oracle for k-linearizations, usable for small posets.
long brute_k_linearizations(const ForestPoset& p, int k) {
  const int m = p.size();
  long count = 0;
  std::vector<int> level(m, 1);
  while (true) {
    if (is_k_linearization(p, level, k)) ++count;
    int i = 0;
    while (i < m && level[i] == k) level[i++] = 1;
    if (i == m) break;
    ++level[i];
  }
  return count;
}

ForestPoset chain(int m) {
  ForestPoset p;
  for (int v = 0; v < m; ++v) p.parent.push_back(v - 1);
  return p;
}

const SchroederTree kBigTree = parse_tree("(o,((o,o,o),o),o,(o,(o,o,o,o)))");

}  // namespace

TEST_CASE("tree grammar round trips") {
  for (const std::string s :
       {"o", "(o,o)", "((o,o),o,o)", "(o,((o,o,o),o),o,(o,(o,o,o,o)))"}) {
    const SchroederTree t = parse_tree(s);
    CHECK(serialize_tree(t) == s);
  }
  CHECK(parse_tree("o").degree() == 0);
  CHECK(parse_tree("(o,o)").degree() == 1);
  const SchroederTree t = parse_tree("((o,o),o,o)");
  CHECK(t.degree() == 3);
  CHECK(t.internal_count() == 2);
}

TEST_CASE("tree grammar rejects malformed input") {
  CHECK_THROWS_AS(parse_tree(""), ParseError);
  CHECK_THROWS_AS(parse_tree("(o)"), ParseError);
  CHECK_THROWS_AS(parse_tree("(o,o"), ParseError);
  CHECK_THROWS_AS(parse_tree("(o,o))"), ParseError);
  CHECK_THROWS_AS(parse_tree("x"), ParseError);
  CHECK_THROWS_AS(parse_tree("(o,,o)"), ParseError);
  try {
    parse_tree("(o,x)");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("offset 3") != std::string::npos);
  }
}

TEST_CASE("enumeration counts match the recurrence oracle") {
  const auto oracle = schroder_recurrence(7);
  for (int n = 0; n <= 7; ++n) CHECK(count_degree(n) == oracle[n]);
  CHECK(enum_schroder(0).size() == 1);
  CHECK(enum_schroder(3).size() == 11);
  CHECK(enum_schroder(4).size() == 45);
}

TEST_CASE("enumeration is duplicate free and canonically ordered") {
  for (int n = 0; n <= 5; ++n) {
    const auto trees = enum_schroder(n);
    std::vector<std::string> strings;
    for (const auto& t : trees) {
      CHECK(is_valid_schroder(t));
      CHECK(t.degree() == n);
      strings.push_back(serialize_tree(t));
    }
    auto sorted = strings;
    std::sort(sorted.begin(), sorted.end());
    CHECK(strings == sorted);
    CHECK(std::set<std::string>(strings.begin(), strings.end()).size() ==
          strings.size());
  }
}

TEST_CASE("enumeration by internal vertex count") {
  CHECK(enum_schroder_by_k(3, 1).size() == 1);
  CHECK(enum_schroder_by_k(3, 2).size() == 5);
  CHECK(enum_schroder_by_k(3, 3).size() == 5);
  CHECK(enum_schroder_by_k(3, 1).front() == make_corolla(4));
  for (int n = 1; n <= 6; ++n) {
    std::size_t total = 0;
    for (int k = 1; k <= n; ++k) {
      for (const auto& t : enum_schroder_by_k(n, k)) CHECK(t.internal_count() == k);
      total += enum_schroder_by_k(n, k).size();
    }
    CHECK(total == enum_schroder(n).size());
    CHECK(Integer(static_cast<long>(enum_schroder_by_k(n, n).size())) == catalan(n));
  }
}

TEST_CASE("enumeration respects the size cap") {
  CHECK_THROWS_AS(enum_schroder(11, 10), SizeLimitError);
  CHECK_THROWS_AS(enum_schroder(-1), DomainError);
}

TEST_CASE("prime and boolean predicates") {
  for (int arms = 2; arms <= 5; ++arms) {
    CHECK(is_prime(make_corolla(arms)));
    CHECK(is_boolean(make_corolla(arms)));
  }
  CHECK_FALSE(is_prime(parse_tree("((o,o),o)")));
  CHECK(is_prime(parse_tree("(o,(o,o))")));
  CHECK_FALSE(is_boolean(parse_tree("(o,(o,o))")));
  CHECK(is_boolean(parse_tree("((o,o),o)")));

  long prime3 = 0;
  long boolean3 = 0;
  for (const auto& t : enum_schroder(3)) {
    prime3 += is_prime(t);
    boolean3 += is_boolean(t);
  }
  CHECK(prime3 == 6);
  CHECK(boolean3 == 4);

  long prime1 = 0;
  for (const auto& t : enum_schroder(1)) prime1 += is_prime(t);
  CHECK(prime1 == 1);

  for (int n = 2; n <= 6; ++n) {
    long prime = 0;
    long boolean = 0;
    for (const auto& t : enum_schroder(n)) {
      prime += is_prime(t);
      boolean += is_boolean(t);
    }
    CHECK(prime == 2 * static_cast<long>(enum_schroder(n - 1).size()));
    CHECK(boolean == (1L << (n - 1)));
  }
}

TEST_CASE("skeleton construction") {
  CHECK(skeleton(make_corolla(3)).parent == std::vector<int>{-1});
  CHECK(skeleton(parse_tree("((o,o),o)")).parent == std::vector<int>{-1, 0});
  CHECK(skeleton(kBigTree).parent == std::vector<int>{-1, 0, 1, 0, 3});
}

TEST_CASE("tree factorial on poset shapes") {
  CHECK(forest_factorial(chain(1)) == 1);
  CHECK(forest_factorial(chain(2)) == 2);
  CHECK(forest_factorial(ForestPoset{{-1, 0, 0}}) == 3);
  CHECK(forest_factorial(ForestPoset{{-1, -1}}) == 1);
  for (int m = 1; m <= 6; ++m) CHECK(forest_factorial(chain(m)) == factorial(m));
}

TEST_CASE("linearization counting matches the exhaustive oracle") {
  CHECK(count_k_linearizations(chain(1), 1) == 1);
  CHECK(count_k_linearizations(chain(2), 1) == 0);
  CHECK(count_k_linearizations(chain(2), 2) == 1);
  const ForestPoset cherry{{-1, 0, 0}};
  CHECK(count_k_linearizations(cherry, 2) == 1);
  CHECK(count_k_linearizations(cherry, 3) == 2);

  for (int n = 1; n <= 5; ++n)
    for (const auto& t : enum_schroder(n)) {
      const ForestPoset sk = skeleton(t);
      for (int k = 1; k <= sk.size(); ++k)
        CHECK(count_k_linearizations(sk, k) == brute_k_linearizations(sk, k));
    }
  const ForestPoset big = skeleton(kBigTree);
  for (int k = 1; k <= big.size(); ++k)
    CHECK(count_k_linearizations(big, k) == brute_k_linearizations(big, k));
}

TEST_CASE("linearization counts vanish outside the feasible band") {
  const ForestPoset shapes[] = {chain(4), skeleton(kBigTree)};
  for (const auto& p : shapes) {
    int height = 0;
    for (int v = 0; v < p.size(); ++v) {
      int h = 1;
      for (int u = v; p.parent[u] >= 0; u = p.parent[u]) ++h;
      height = std::max(height, h);
    }
    for (int k = 1; k < height; ++k) CHECK(count_k_linearizations(p, k) == 0);
    CHECK(count_k_linearizations(p, p.size() + 1) == 0);
  }
}

TEST_CASE("enumerated linearizations agree with the counts") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enum_schroder(n)) {
      const ForestPoset sk = skeleton(t);
      for (int k = 1; k <= sk.size(); ++k) {
        long seen = 0;
        for_each_k_linearization(sk, k, [&](const Linearization& f) {
          REQUIRE(is_k_linearization(sk, f, k));
          ++seen;
        });
        CHECK(seen == count_k_linearizations(sk, k));
      }
    }
}

TEST_CASE("ascent free linearization examples") {
  CHECK(ascent_free_linearization(make_corolla(3)) == Linearization{1});
  CHECK(ascent_free_linearization(parse_tree("((o,o),o)")) == Linearization{1, 2});
  CHECK(ascent_free_linearization(parse_tree("((o,o),(o,o))")) ==
        Linearization{1, 3, 2});
  CHECK(ascent_free_linearization(kBigTree) == Linearization{1, 4, 5, 2, 3});
}

TEST_CASE("ascent detection separates the mirrored pre-order") {
  const SchroederTree t = parse_tree("((o,o),(o,(o,o)))");
  const ForestPoset sk = skeleton(t);
  REQUIRE(sk.parent == std::vector<int>{-1, 0, 0, 2});
  CHECK(is_ascent_free(sk, {1, 4, 2, 3}));
  CHECK_FALSE(is_ascent_free(sk, {1, 3, 2, 4}));
  CHECK_FALSE(is_ascent_free(sk, {1, 2, 3, 4}));
}

TEST_CASE("the ascent free linearization is unique") {
  for (int n = 1; n <= 7; ++n) {
    long trees = 0;
    for_each_schroder(n, [&](const SchroederTree& t) {
      ++trees;
      const ForestPoset sk = skeleton(t);
      const Linearization expect = ascent_free_linearization(t);
      long hits = 0;
      for_each_k_linearization(sk, sk.size(), [&](const Linearization& g) {
        if (is_ascent_free(sk, g)) {
          ++hits;
          CHECK(g == expect);
        }
      });
      REQUIRE(hits == 1);
    });
    CHECK(trees == count_degree(n));
  }
}

TEST_CASE("murua coefficients") {
  CHECK(murua_coefficient(make_corolla(2)) == Rational(1));
  CHECK(murua_coefficient(parse_tree("((o,o),o)")) == Rational(-1, 2));
  CHECK(murua_coefficient(parse_tree("((o,o),(o,o))")) == Rational(1, 6));
  // Alternating-sum oracle straight from the definition.
  for (const auto& t : enum_schroder(4)) {
    const ForestPoset sk = skeleton(t);
    Rational expect(0);
    for (int k = 1; k <= sk.size(); ++k) {
      Rational term(brute_k_linearizations(sk, k), k);
      if (k % 2 == 0) term = -term;
      expect += term;
    }
    expect.canonicalize();
    CHECK(murua_coefficient(t) == expect);
  }
}
