#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "schroder/hopf.hpp"
#include "schroder/trees.hpp"

using namespace schroder;

namespace {

Word word(std::vector<int> letters) {
  Word w;
  w.letters = std::move(letters);
  return w;
}

BarMonomial bm(std::vector<std::vector<int>> words) {
  BarMonomial m;
  for (auto& w : words) m.words.push_back(word(std::move(w)));
  return m;
}

TensorElement element(int rank,
                      std::vector<std::pair<std::vector<BarMonomial>, int>> terms) {
  TensorElement e(rank);
  for (auto& [key, c] : terms) e.add(key, Rational(c));
  return e;
}

const std::vector<Word> kSmallWords = {
    word({1}),          word({1, 2}),       word({1, 2, 3}), word({1, 2, 3, 4}),
    word({1, 1}),       word({1, 2, 1}),    word({1, 1, 2, 2}),
    word({2, 1, 1, 2}), word({1, 1, 1, 1}),
};

}  // namespace

TEST_CASE("word parsing and formatting") {
  CHECK(word_to_string(parse_word("1 2 10")) == "1 2 10");
  CHECK(parse_word("  3   4 ") == word({3, 4}));
  CHECK_THROWS_AS(parse_word(""), ParseError);
  CHECK_THROWS_AS(parse_word("x y"), ParseError);
  CHECK_THROWS_AS(parse_word("0 1"), ParseError);
  CHECK_THROWS_AS(parse_word("-2"), ParseError);
  CHECK(bar_monomial_to_string(BarMonomial{}) == "1");
  CHECK(bar_monomial_to_string(bm({{1, 2}, {3}})) == "1 2|3");
}

TEST_CASE("restriction, components and splitting") {
  const Word w = word({11, 12, 13, 14, 15, 16, 17, 18, 19});
  CHECK(restrict_word(w, {4, 7, 9}) == word({14, 17, 19}));
  CHECK(restrict_word(w, {1, 2, 3, 4, 5, 6, 7, 8, 9}) == w);
  CHECK(restrict_word(w, {}) == Word{});
  CHECK_THROWS_AS(restrict_word(w, {10}), DomainError);

  CHECK(connected_components({4, 7, 9}, {2, 3, 4, 5, 6, 7, 8, 9}) ==
        std::vector<std::vector<int>>{{2, 3}, {5, 6}, {8}});
  CHECK(connected_components({4, 7, 9}, {2, 3, 4, 6, 7, 8, 9}) ==
        std::vector<std::vector<int>>{{2, 3}, {6}, {8}});
  CHECK(connected_components({1, 2}, {1, 2}).empty());
  CHECK(connected_components({}, {1, 2, 3}) ==
        std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK_THROWS_AS(connected_components({4}, {2, 3}), DomainError);

  CHECK(split_word(w, {4, 7, 9}, {2, 3, 4, 6, 7, 8, 9}) ==
        bm({{12, 13}, {16}, {18}}));
  CHECK(split_word(w, {4, 7, 9}, {1, 2, 3, 4, 5, 6, 7, 8, 9}) ==
        bm({{11, 12, 13}, {15, 16}, {18}}));
  CHECK(split_word(w, {4, 7, 9}, {4, 7, 9}) == BarMonomial{});
}

TEST_CASE("bar product") {
  const auto x = TensorElement::from_word(word({1}));
  const auto y = TensorElement::from_monomial(bm({{2, 3}}));
  CHECK(bar_product(x, y) == TensorElement::from_monomial(bm({{1}, {2, 3}})));
  CHECK(bar_product(x, TensorElement::unit(1)) == x);
  CHECK(bar_product(TensorElement::unit(1), x) == x);

  TensorElement a(1);
  a.add({bm({{1}, {2}})}, Rational(2));
  TensorElement b(1);
  b.add({bm({{3}})}, Rational(3));
  TensorElement expect(1);
  expect.add({bm({{1}, {2}, {3}})}, Rational(6));
  CHECK(bar_product(a, b) == expect);
  CHECK_THROWS_AS(bar_product(x, TensorElement(2)), DomainError);
}

TEST_CASE("coproduct on small words") {
  CHECK(coproduct(TensorElement::from_word(word({1}))) ==
        element(2, {{{bm({{1}}), BarMonomial{}}, 1},
                    {{BarMonomial{}, bm({{1}})}, 1}}));
  CHECK(coproduct(TensorElement::from_word(word({1, 2}))) ==
        element(2, {{{bm({{1, 2}}), BarMonomial{}}, 1},
                    {{bm({{1}}), bm({{2}})}, 1},
                    {{bm({{2}}), bm({{1}})}, 1},
                    {{BarMonomial{}, bm({{1, 2}})}, 1}}));
  CHECK(coproduct(TensorElement::from_word(word({1, 2, 3}))) ==
        element(2, {{{bm({{1, 2, 3}}), BarMonomial{}}, 1},
                    {{bm({{1, 2}}), bm({{3}})}, 1},
                    {{bm({{1, 3}}), bm({{2}})}, 1},
                    {{bm({{2, 3}}), bm({{1}})}, 1},
                    {{bm({{1}}), bm({{2, 3}})}, 1},
                    {{bm({{2}}), bm({{1}, {3}})}, 1},
                    {{bm({{3}}), bm({{1, 2}})}, 1},
                    {{BarMonomial{}, bm({{1, 2, 3}})}, 1}}));
}

TEST_CASE("coproduct is multiplicative and counital") {
  const auto m = bm({{1, 2}, {3}});
  const auto lhs = coproduct(TensorElement::from_monomial(m));
  const auto rhs = bar_product(coproduct(TensorElement::from_word(word({1, 2}))),
                               coproduct(TensorElement::from_word(word({3}))));
  CHECK(lhs == rhs);
  CHECK(counit(TensorElement::unit(1)) == Rational(1));
  CHECK(counit(TensorElement::from_word(word({1}))) == Rational(0));
  for (const auto& w : kSmallWords) {
    const auto x = TensorElement::from_word(w);
    const auto cop = coproduct(x);
    TensorElement left(1), right(1);
    for (const auto& [key, c] : cop.terms()) {
      if (key[1].is_unit()) left.add({key[0]}, c);
      if (key[0].is_unit()) right.add({key[1]}, c);
    }
    CHECK(left == x);
    CHECK(right == x);
  }
}

TEST_CASE("coassociativity") {
  for (const auto& w : kSmallWords) {
    const auto cop = coproduct(TensorElement::from_word(w));
    TensorElement first(3), last(3);
    for (const auto& [key, c] : cop.terms()) {
      const auto lcop = coproduct(TensorElement::from_monomial(key[0]));
      for (const auto& [lkey, lc] : lcop.terms())
        first.add({lkey[0], lkey[1], key[1]}, Rational(c * lc));
      const auto rcop = coproduct(TensorElement::from_monomial(key[1]));
      for (const auto& [rkey, rc] : rcop.terms())
        last.add({key[0], rkey[0], rkey[1]}, Rational(c * rc));
    }
    CHECK(first == last);
    CHECK(last == iterated_coproduct(TensorElement::from_word(w), 3));
  }
}

TEST_CASE("half coproducts split the coproduct") {
  CHECK(half_coproduct_left(TensorElement::from_word(word({1}))) ==
        element(2, {{{bm({{1}}), BarMonomial{}}, 1}}));
  CHECK(half_coproduct_right(TensorElement::from_word(word({1}))) ==
        element(2, {{{BarMonomial{}, bm({{1}})}, 1}}));
  CHECK(half_coproduct_left(TensorElement::from_word(word({1, 2}))) ==
        element(2, {{{bm({{1, 2}}), BarMonomial{}}, 1},
                    {{bm({{1}}), bm({{2}})}, 1}}));
  const std::vector<BarMonomial> monomials = {
      bm({{1}}), bm({{1, 2}}), bm({{1}, {2}}), bm({{1, 2}, {3}}),
      bm({{1}, {2}, {3}}), bm({{1, 2, 3, 4}}), bm({{1, 2}, {3, 4}})};
  for (const auto& m : monomials) {
    const auto x = TensorElement::from_monomial(m);
    CHECK(half_coproduct_left(x) + half_coproduct_right(x) == coproduct(x));
  }
  CHECK_THROWS_AS(half_coproduct_left(TensorElement::unit(1)), DomainError);
}

TEST_CASE("reduced and iterated coproducts") {
  CHECK(reduced_coproduct(TensorElement::from_word(word({1}))).is_zero());
  CHECK(reduced_coproduct(TensorElement::from_word(word({1, 2}))) ==
        element(2, {{{bm({{1}}), bm({{2}})}, 1}, {{bm({{2}}), bm({{1}})}, 1}}));
  CHECK_THROWS_AS(reduced_coproduct(TensorElement::unit(1)), DomainError);

  const auto x = TensorElement::from_word(word({1, 2, 3}));
  TensorElement expect(3);
  for (const std::vector<int> p :
       {std::vector<int>{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2},
        {3, 2, 1}})
    expect.add({bm({{p[0]}}), bm({{p[1]}}), bm({{p[2]}})}, Rational(1));
  CHECK(iterated_reduced_coproduct(x, 3) == expect);
  CHECK(iterated_reduced_coproduct(x, 1) == x);
  CHECK(iterated_reduced_coproduct(TensorElement::from_word(word({1, 2})), 3)
            .is_zero());
}

TEST_CASE("tree expansion of the iterated reduced coproduct") {
  CHECK(schroder_iterated_terms(word({1, 2}), 2) ==
        element(2, {{{bm({{1}}), bm({{2}})}, 1}, {{bm({{2}}), bm({{1}})}, 1}}));
  for (const auto& w : kSmallWords) {
    const int n = w.size();
    if (n > 4) continue;
    const auto x = TensorElement::from_word(w);
    for (int k = 1; k <= n; ++k)
      CHECK(schroder_iterated_terms(w, k) == iterated_reduced_coproduct(x, k));
  }
}

TEST_CASE("forest expansion of the reduced coproduct") {
  CHECK(forest_coproduct_terms(bm({{1}})).is_zero());
  CHECK(forest_coproduct_terms(bm({{1}, {2}})) ==
        element(2, {{{bm({{1}}), bm({{2}})}, 1}, {{bm({{2}}), bm({{1}})}, 1}}));
  const std::vector<BarMonomial> monomials = {
      bm({{1, 2}}), bm({{1, 2, 3}}), bm({{1, 2}, {3}}), bm({{1}, {2}, {3}}),
      bm({{1, 2}, {3, 4}}), bm({{1, 2, 3, 4}}), bm({{1}, {2, 3, 4}}),
      bm({{1, 1}, {2, 1}})};
  for (const auto& m : monomials)
    CHECK(forest_coproduct_terms(m) ==
          reduced_coproduct(TensorElement::from_monomial(m)));
}

TEST_CASE("antipode frozen values") {
  TensorElement s1(1);
  s1.add({bm({{1}})}, Rational(-1));
  CHECK(antipode_schroder(word({1})) == s1);

  CHECK(antipode_schroder(word({1, 2})) ==
        element(1, {{{bm({{1, 2}})}, -1},
                    {{bm({{1}, {2}})}, 1},
                    {{bm({{2}, {1}})}, 1}}));

  CHECK(antipode_schroder(word({1, 2, 3})) ==
        element(1, {{{bm({{1, 2, 3}})}, -1},
                    {{bm({{3}, {1, 2}})}, 1},
                    {{bm({{1}, {2, 3}})}, 1},
                    {{bm({{2, 3}, {1}})}, 1},
                    {{bm({{1, 3}, {2}})}, 1},
                    {{bm({{1, 2}, {3}})}, 1},
                    {{bm({{3}, {2}, {1}})}, -1},
                    {{bm({{3}, {1}, {2}})}, -1},
                    {{bm({{2}, {3}, {1}})}, -1},
                    {{bm({{1}, {3}, {2}})}, -1},
                    {{bm({{1}, {2}, {3}})}, -1}}));
}

TEST_CASE("antipode methods agree") {
  for (const auto& w : kSmallWords) {
    const auto x = TensorElement::from_word(w);
    const auto s = antipode_schroder(x);
    CHECK(s == antipode_takeuchi(x));
    CHECK(s == antipode_bogoliubov(x));
    CHECK(s == antipode_conv_identity(x));
  }
  const auto unit = TensorElement::unit(1);
  for (const auto method : {AntipodeMethod::Schroder, AntipodeMethod::Takeuchi,
                            AntipodeMethod::Bogoliubov, AntipodeMethod::ConvIdentity})
    CHECK(antipode(unit, method) == unit);
  CHECK_THROWS_AS(parse_antipode_method("newton"), DomainError);
}

TEST_CASE("antipode reverses bar products") {
  const auto m = bm({{1}, {2}});
  const auto s = antipode_schroder(TensorElement::from_monomial(m));
  CHECK(s == TensorElement::from_monomial(bm({{2}, {1}})));
  CHECK(s == antipode_takeuchi(TensorElement::from_monomial(m)));
  const auto big = bm({{1, 2}, {3}});
  CHECK(antipode_schroder(TensorElement::from_monomial(big)) ==
        bar_product(antipode_schroder(word({3})),
                    antipode_schroder(word({1, 2}))));
}

TEST_CASE("antipode axiom") {
  const std::vector<BarMonomial> monomials = {
      bm({{1}}), bm({{1, 2}}), bm({{1, 2, 3}}), bm({{1}, {2}}),
      bm({{1, 2}, {3}}), bm({{1, 1}}), bm({{1, 2, 1}})};
  for (const auto& m : monomials) {
    const auto x = TensorElement::from_monomial(m);
    CHECK(antipode_axiom_lhs(x, AntipodeMethod::Schroder).is_zero());
    const auto cop = coproduct(x);
    TensorElement rhs(1);
    for (const auto& [key, c] : cop.terms())
      rhs.add_scaled(
          bar_product(TensorElement::from_monomial(key[0]),
                      antipode_schroder(TensorElement::from_monomial(key[1]))),
          c);
    CHECK(rhs.is_zero());
  }
  CHECK(antipode_axiom_lhs(TensorElement::unit(1), AntipodeMethod::Schroder) ==
        TensorElement::unit(1));
}

TEST_CASE("grading is preserved") {
  const auto x = TensorElement::from_word(word({1, 2, 3, 4}));
  const auto cop = coproduct(x);
  for (const auto& [key, c] : cop.terms())
    CHECK(key[0].degree() + key[1].degree() == 4);
  const auto s = antipode_schroder(x);
  for (const auto& [key, c] : s.terms())
    CHECK(key[0].degree() == 4);
}

TEST_CASE("commutative variant") {
  const auto s2 = sym_antipode(word({1, 2}));
  CommElement expect(1);
  expect.add({CommMonomial::from_bar(bm({{1, 2}}))}, Rational(-1));
  expect.add({CommMonomial::from_bar(bm({{1}, {2}}))}, Rational(2));
  CHECK(s2 == expect);

  CommElement s1(1);
  s1.add({CommMonomial::from_bar(bm({{1}}))}, Rational(-1));
  CHECK(sym_antipode(word({1})) == s1);

  for (const auto& w : kSmallWords) {
    if (w.size() > 4) continue;
    CHECK(sym_antipode(w) == sym_antipode_takeuchi(w));
    CHECK(commutative_projection(antipode_schroder(w)) == sym_antipode(w));
    for (int k = 1; k <= w.size(); ++k)
      CHECK(sym_iterated_terms(w, k) == sym_iterated_reduced_coproduct(w, k));
  }
}

TEST_CASE("cancellation lemma on small trees") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enum_schroder(n)) {
      const ForestPoset sk = skeleton(t);
      const int m = sk.size();
      std::map<Linearization, long> signed_sum;
      for (int k = 1; k <= m; ++k)
        for_each_k_linearization(sk, k, [&](const Linearization& f) {
          signed_sum[linearization_refinement(f)] += (k % 2 == 1) ? -1 : 1;
        });
      for_each_k_linearization(sk, m, [&](const Linearization& g) {
        const long expect =
            is_ascent_free(sk, g) ? ((m % 2 == 1) ? -1 : 1) : 0;
        CHECK(signed_sum[g] == expect);
      });
    }
}
