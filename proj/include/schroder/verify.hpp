#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "schroder/functional.hpp"
#include "schroder/hopf.hpp"
#include "schroder/json_io.hpp"
#include "schroder/ncprob.hpp"
#include "schroder/partitions.hpp"
#include "schroder/poset.hpp"
#include "schroder/trees.hpp"
#include "schroder/words.hpp"

namespace schroder::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Options {
  int degree = 4;
  unsigned seed = 1;
  int tables = 5;
  int jobs = 1;
};

// ---------------------------------------------------------------------------
// Test data families.

inline Word identity_word(int len) {
  Word w;
  for (int i = 1; i <= len; ++i) w.letters.push_back(i);
  return w;
}

inline Word ones_word(int len) {
  Word w;
  w.letters.assign(len, 1);
  return w;
}

inline std::vector<Word> permutation_words(int max_len) {
  std::vector<Word> out;
  for (int len = 1; len <= max_len; ++len) {
    Word w = identity_word(len);
    do {
      out.push_back(w);
    } while (std::next_permutation(w.letters.begin(), w.letters.end()));
  }
  return out;
}

// Fixed 20-word family with repeated letters, lengths 2 through 6.
inline std::vector<Word> repeated_letter_words(int max_len = 6) {
  static const char* texts[20] = {
      "1 1",         "1 1 1",       "1 1 2",       "1 2 1",       "2 1 1",
      "1 1 1 1",     "1 1 2 2",     "1 2 1 2",     "1 2 2 1",     "2 1 1 2",
      "1 1 1 2",     "1 2 3 1",     "1 1 1 1 1",   "1 1 2 1 1",   "1 2 1 2 1",
      "1 2 3 2 1",   "1 1 2 2 3",   "1 1 1 1 1 1", "1 2 2 3 3 1", "1 2 1 2 1 2"};
  std::vector<Word> out;
  for (const char* t : texts) {
    Word w = parse_word(t);
    if (w.size() <= max_len) out.push_back(w);
  }
  return out;
}

// One bar monomial per composition of each total degree, with distinct
// letters, plus the same shapes over a single repeated letter.
inline std::vector<BarMonomial> composition_monomials(int max_total) {
  std::set<BarMonomial> out;
  for (int d = 1; d <= max_total; ++d) {
    for (std::uint32_t cuts = 0; cuts < (1u << (d - 1)); ++cuts) {
      BarMonomial distinct, ones;
      Word wd, wo;
      for (int i = 1; i <= d; ++i) {
        wd.letters.push_back(i);
        wo.letters.push_back(1);
        const bool cut_here = i < d && ((cuts >> (i - 1)) & 1u);
        if (cut_here || i == d) {
          distinct.words.push_back(wd);
          ones.words.push_back(wo);
          wd.letters.clear();
          wo.letters.clear();
        }
      }
      out.insert(distinct);
      out.insert(ones);
    }
  }
  return std::vector<BarMonomial>(out.begin(), out.end());
}

// ---------------------------------------------------------------------------
// Independent counting oracle: trees with m leaves counted by a convolution
// DP over the forest of root subtrees, never touching the enumerator.
inline std::vector<Integer> schroder_counts_oracle(int max_n) {
  const int leaves = max_n + 1;
  std::vector<Integer> L(leaves + 1, 0);
  if (leaves >= 1) L[1] = 1;
  for (int m = 2; m <= leaves; ++m) {
    // forests[j][x]: ordered forests of j trees with x total leaves, using
    // tree counts already known for fewer than m leaves.
    std::vector<Integer> prev(m + 1, 0), cur(m + 1, 0);
    for (int x = 1; x < m; ++x) prev[x] = L[x];
    Integer total = 0;
    for (int j = 2; j <= m; ++j) {
      std::fill(cur.begin(), cur.end(), Integer(0));
      for (int x = j; x <= m; ++x)
        for (int y = 1; y <= x - (j - 1); ++y) cur[x] += prev[x - y] * L[y];
      total += cur[m];
      std::swap(prev, cur);
    }
    L[m] = total;
  }
  std::vector<Integer> counts(max_n + 1);
  for (int n = 0; n <= max_n; ++n) counts[n] = L[n + 1];
  return counts;
}

// ---------------------------------------------------------------------------
// Seeded random tables. Raw engine output is reduced by hand so the values
// do not depend on library distribution internals.

inline Rational small_rational(std::uint64_t a, std::uint64_t b) {
  const long num = static_cast<long>(a % 11) - 5;
  const long den = static_cast<long>(b % 3) + 1;
  return make_rational(num, den);
}

inline MomentTable random_moment_table(int letters, int degree, unsigned seed) {
  std::mt19937_64 gen(seed);
  MomentTable t;
  for (int i = 1; i <= letters; ++i) t.alphabet.push_back("a" + std::to_string(i));
  t.max_degree = degree;
  for (const Word& w : words_up_to(letters, degree)) {
    const std::uint64_t a = gen(), b = gen();
    t.values.emplace(w, small_rational(a, b));
  }
  return t;
}

inline CumulantTable random_cumulant_table(int letters, int degree, CumulantKind kind,
                                           unsigned seed) {
  const MomentTable m = random_moment_table(letters, degree, seed);
  CumulantTable t;
  t.alphabet = m.alphabet;
  t.max_degree = m.max_degree;
  t.kind = kind;
  t.values = m.values;
  return t;
}

// Deterministic pseudo-random functional on all bar monomials.
inline Functional hashed_functional(unsigned seed) {
  return Functional::from_rule([seed](const BarMonomial& m) {
    std::uint64_t h = 1469598103934665603ull ^ (seed * 1099511628211ull);
    for (const char c : bar_monomial_to_string(m)) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    return small_rational(h, h >> 17);
  });
}

// ---------------------------------------------------------------------------
// Individual checks. Every check returns "" on success and a diagnostic
// otherwise.

inline std::string check_enumeration_counts(int max_n, int bsch_max, int psch_max,
                                            int diag_max) {
  const std::vector<Integer> oracle = schroder_counts_oracle(std::max(max_n, 1));
  for (int n = 0; n <= max_n; ++n) {
    long count = 0;
    for_each_schroder(n, [&](const SchroederTree&) { ++count; }, std::max(n, kDefaultEnumCap));
    if (Integer(count) != oracle[n])
      return "enumerated " + std::to_string(count) + " trees of degree " + std::to_string(n) +
             ", DP oracle says " + oracle[n].get_str();
  }
  for (int n = 1; n <= bsch_max; ++n) {
    long count = 0;
    for_each_schroder(n, [&](const SchroederTree& t) { count += is_boolean(t) ? 1 : 0; },
                      std::max(n, kDefaultEnumCap));
    if (count != (1l << (n - 1)))
      return "boolean tree count at degree " + std::to_string(n) + " is " +
             std::to_string(count) + ", expected 2^" + std::to_string(n - 1);
  }
  {
    long count = 0;
    for_each_schroder(1, [&](const SchroederTree& t) { count += is_prime(t) ? 1 : 0; });
    if (count != 1) return "prime tree count at degree 1 is " + std::to_string(count);
  }
  for (int n = 2; n <= psch_max; ++n) {
    long long prime = 0, smaller = 0;
    for_each_schroder(n, [&](const SchroederTree& t) { prime += is_prime(t) ? 1 : 0; },
                      std::max(n, kDefaultEnumCap));
    for_each_schroder(n - 1, [&](const SchroederTree&) { ++smaller; },
                      std::max(n - 1, kDefaultEnumCap));
    if (prime != 2 * smaller)
      return "prime tree count at degree " + std::to_string(n) + " is " +
             std::to_string(prime) + ", expected twice " + std::to_string(smaller);
  }
  for (int n = 1; n <= diag_max; ++n) {
    long count = 0;
    for_each_schroder(n, [&](const SchroederTree& t) {
      count += analyze(t).skeleton.size() == n ? 1 : 0;
    }, std::max(n, kDefaultEnumCap));
    if (Integer(count) != catalan(static_cast<unsigned>(n)))
      return "binary tree count at degree " + std::to_string(n) + " is " +
             std::to_string(count) + ", expected Catalan";
  }
  return "";
}

inline std::string check_antipode_three_way(const std::vector<Word>& words) {
  for (const Word& w : words) {
    const TensorElement x = TensorElement::from_word(w);
    const TensorElement s = antipode_schroder(w);
    if (!(s == antipode_takeuchi(x)))
      return "schroder vs takeuchi mismatch on word " + word_to_string(w);
    if (!(s == antipode_bogoliubov(x)))
      return "schroder vs bogoliubov mismatch on word " + word_to_string(w);
  }
  return "";
}

inline std::string check_antipode_conv_identity(const std::vector<Word>& words) {
  for (const Word& w : words) {
    const TensorElement x = TensorElement::from_word(w);
    if (!(antipode_schroder(w) == antipode_conv_identity(x)))
      return "schroder vs convolution-identity mismatch on word " + word_to_string(w);
  }
  return "";
}

inline std::string check_antipode_axiom(const std::vector<Word>& words) {
  std::map<Word, TensorElement> memo;
  const auto s_word = [&memo](const Word& w) -> const TensorElement& {
    auto it = memo.find(w);
    if (it == memo.end()) it = memo.emplace(w, antipode_schroder(w)).first;
    return it->second;
  };
  const auto s_bar = [&](const BarMonomial& m) {
    TensorElement acc = TensorElement::unit(1);
    for (int i = m.bar_count() - 1; i >= 0; --i) acc = bar_product(acc, s_word(m.words[i]));
    return acc;
  };
  for (const Word& w : words) {
    TensorElement left(1), right(1);
    detail::for_each_coproduct_pair(BarMonomial{{w}}, 0,
                                    [&](BarMonomial&& l, BarMonomial&& r) {
      const TensorElement sl = s_bar(l);
      for (const auto& [key, c] : sl.terms()) left.add({bar_concat(key[0], r)}, c);
      const TensorElement sr = s_bar(r);
      for (const auto& [key, c] : sr.terms()) right.add({bar_concat(l, key[0])}, c);
    });
    if (!left.is_zero())
      return "m(S x id)Delta != 0 on word " + word_to_string(w);
    if (!right.is_zero())
      return "m(id x S)Delta != 0 on word " + word_to_string(w);
  }
  return "";
}

inline std::string check_iterated_theorem(const std::vector<Word>& words) {
  for (const Word& w : words) {
    const TensorElement x = TensorElement::from_word(w);
    for (int k = 1; k <= w.size(); ++k) {
      if (!(schroder_iterated_terms(w, k) == iterated_reduced_coproduct(x, k)))
        return "tree sum vs iterated reduced coproduct mismatch on word " + word_to_string(w) +
               " at k=" + std::to_string(k);
    }
  }
  return "";
}

inline std::string check_forest_coproduct(int max_total_degree) {
  for (const BarMonomial& m : composition_monomials(max_total_degree)) {
    const TensorElement x = TensorElement::from_monomial(m);
    if (!(forest_coproduct_terms(m) == reduced_coproduct(x)))
      return "forest formula vs reduced coproduct mismatch on " + bar_monomial_to_string(m);
  }
  return "";
}

inline std::string check_cancellation_lemma(int max_degree) {
  for (int n = 1; n <= max_degree; ++n) {
    std::string failure;
    for_each_schroder(n, [&](const SchroederTree& t) {
      if (!failure.empty()) return;
      const ForestPoset sk = skeleton(t);
      const int size = sk.size();
      std::map<Linearization, long long> signed_sum;
      for (int k = 1; k <= size; ++k)
        for_each_k_linearization(sk, k, [&](const Linearization& f) {
          signed_sum[linearization_refinement(f)] += (k % 2) ? -1 : 1;
        });
      const Linearization af = ascent_free_linearization(t);
      const long long expected_af = (size % 2) ? -1 : 1;
      for (const auto& [g, total] : signed_sum) {
        const bool ascent_free = is_ascent_free(sk, g);
        if (ascent_free != (g == af))
          return void(failure = "ascent-free detection disagrees with mirrored pre-order on " +
                                serialize_tree(t));
        const long long expected = ascent_free ? expected_af : 0;
        if (total != expected)
          return void(failure = "signed refinement sum is " + std::to_string(total) +
                                " on tree " + serialize_tree(t));
      }
      if (!signed_sum.count(af))
        failure = "ascent-free linearization missing from refinements of " + serialize_tree(t);
    }, std::max(n, kDefaultEnumCap));
    if (!failure.empty()) return failure;
  }
  return "";
}

inline std::string check_coassociativity(int max_total_degree) {
  for (const BarMonomial& m : composition_monomials(max_total_degree)) {
    const TensorElement x = TensorElement::from_monomial(m);
    const TensorElement c2 = coproduct(x);
    TensorElement left(3);
    for (const auto& [key, c] : c2.terms()) {
      const Rational coeff = c;
      detail::for_each_coproduct_pair(key[0], 0, [&](BarMonomial&& l, BarMonomial&& r) {
        left.add({std::move(l), std::move(r), key[1]}, coeff);
      });
    }
    if (!(left == detail::expand_last_slot(c2, false)))
      return "coassociativity fails on " + bar_monomial_to_string(m);
  }
  return "";
}

inline std::string check_coproduct_splitting(const std::vector<Word>& words) {
  for (const Word& w : words) {
    const TensorElement x = TensorElement::from_word(w);
    if (!(coproduct(x) == half_coproduct_left(x) + half_coproduct_right(x)))
      return "Delta != Delta_< + Delta_> on word " + word_to_string(w);
  }
  return "";
}

inline std::string check_sym_variant(int max_len) {
  for (int len = 1; len <= max_len; ++len) {
    for (const Word& w : {identity_word(len), ones_word(len)}) {
      const CommElement s = sym_antipode(w);
      if (!(s == sym_antipode_takeuchi(w)))
        return "symmetric antipode routes disagree on word " + word_to_string(w);
      if (!(s == commutative_projection(antipode_schroder(w))))
        return "projection of bar antipode disagrees on word " + word_to_string(w);
      for (int k = 1; k <= len; ++k)
        if (!(sym_iterated_terms(w, k) == sym_iterated_reduced_coproduct(w, k)))
          return "symmetric iterated coproduct mismatch on word " + word_to_string(w) +
                 " at k=" + std::to_string(k);
    }
  }
  return "";
}

inline std::string check_cumulant_method_agreement(const MomentTable& table,
                                                   const std::string& label) {
  {
    const CumulantTable a = cumulants_from_moments(CumulantKind::Free, table, "moebius");
    const CumulantTable b = cumulants_from_moments(CumulantKind::Free, table, "prime-trees");
    const CumulantTable c = cumulants_from_moments(CumulantKind::Free, table, "shuffle");
    if (!(a.values == b.values)) return label + ": free moebius vs prime-trees";
    if (!(a.values == c.values)) return label + ": free moebius vs shuffle";
  }
  {
    const CumulantTable a = cumulants_from_moments(CumulantKind::Boolean, table, "intervals");
    const CumulantTable b = cumulants_from_moments(CumulantKind::Boolean, table, "boolean-trees");
    const CumulantTable c = cumulants_from_moments(CumulantKind::Boolean, table, "shuffle");
    if (!(a.values == b.values)) return label + ": boolean intervals vs boolean-trees";
    if (!(a.values == c.values)) return label + ": boolean intervals vs shuffle";
  }
  {
    const CumulantTable a = cumulants_from_moments(CumulantKind::Monotone, table, "omega-trees");
    const CumulantTable b = cumulants_from_moments(CumulantKind::Monotone, table, "conv-log");
    if (!(a.values == b.values)) return label + ": monotone omega-trees vs conv-log";
  }
  return "";
}

inline std::string check_round_trips(const MomentTable& table, unsigned seed,
                                     const std::string& label) {
  for (CumulantKind kind :
       {CumulantKind::Free, CumulantKind::Boolean, CumulantKind::Monotone}) {
    const CumulantTable c = cumulants_from_moments(kind, table);
    const MomentTable back = moments_from_cumulants(kind, c);
    if (!(back.values == table.values))
      return label + ": moment->cumulant->moment round trip for kind " + kind_to_string(kind);
    const CumulantTable random_c = random_cumulant_table(
        static_cast<int>(table.alphabet.size()), table.max_degree, kind, seed ^ 0x9e3779b9u);
    const MomentTable m = moments_from_cumulants(kind, random_c);
    const CumulantTable back_c = cumulants_from_moments(kind, m);
    if (!(back_c.values == random_c.values))
      return label + ": cumulant->moment->cumulant round trip for kind " + kind_to_string(kind);
  }
  return "";
}

inline std::string check_conv_inverse_agreement(const MomentTable& table, int up_to,
                                                const std::string& label) {
  const MomentTable a = conv_inverse(table, "antipode", up_to);
  for (const char* method : {"geometric", "moebius", "intervals"}) {
    const MomentTable b = conv_inverse(table, method, up_to);
    if (!(a.values == b.values)) return label + ": inverse antipode vs " + method;
  }
  const Functional phi = character_from_moments(table);
  const Functional conv = convolve(phi, conv_inverse_geometric(phi));
  if (conv.value(BarMonomial{}) != 1) return label + ": Phi * Phi^{-1} misses the counit at 1";
  for (const Word& w : words_up_to(static_cast<int>(table.alphabet.size()), up_to))
    if (conv.value(w) != 0)
      return label + ": Phi * Phi^{-1} nonzero on word " + word_to_string(w);
  return "";
}

inline std::string check_fixed_point_link(const MomentTable& table, const std::string& label) {
  const CumulantTable kappa = free_cumulants_fixed_point(table);
  const CumulantTable k_ref = cumulants_from_moments(CumulantKind::Free, table, "moebius");
  if (!(kappa.values == k_ref.values)) return label + ": left fixed point vs free cumulants";
  const CumulantTable beta = boolean_cumulants_fixed_point(table);
  const CumulantTable b_ref = cumulants_from_moments(CumulantKind::Boolean, table, "intervals");
  if (!(beta.values == b_ref.values)) return label + ": right fixed point vs boolean cumulants";
  return "";
}

inline std::string check_exp_log_inverse(int letters, int degree, unsigned seed) {
  const CumulantTable raw =
      random_cumulant_table(letters, degree, CumulantKind::Monotone, seed);
  const Functional alpha = infinitesimal_from_cumulants(raw);
  const Functional back = conv_log(conv_exp(alpha));
  for (const BarMonomial& m : composition_monomials(degree)) {
    bool ok = true;
    for (const Word& w : m.words)
      for (Letter l : w.letters) ok = ok && l <= letters;
    if (!ok) continue;
    if (back.value(m) != alpha.value(m))
      return "log(exp(alpha)) != alpha on " + bar_monomial_to_string(m);
  }
  const MomentTable mt = random_moment_table(letters, degree, seed ^ 0x5151u);
  const Functional phi = character_from_moments(mt);
  const Functional phi_back = conv_exp(conv_log(phi));
  for (const Word& w : words_up_to(letters, degree))
    if (phi_back.value(w) != phi.value(w))
      return "exp(log(Phi)) != Phi on word " + word_to_string(w);
  return "";
}

inline std::string check_half_shuffle_exponentials(const MomentTable& table,
                                                   const std::string& label) {
  const int letters = static_cast<int>(table.alphabet.size());
  const Functional phi = character_from_moments(table);
  const CumulantTable kappa = cumulants_from_moments(CumulantKind::Free, table, "moebius");
  const CumulantTable beta = cumulants_from_moments(CumulantKind::Boolean, table, "intervals");
  const Functional kfun = infinitesimal_from_cumulants(kappa);
  const Functional bfun = infinitesimal_from_cumulants(beta);
  const Functional left = exp_left(kfun);
  const Functional right_neg = exp_right(functional_scale(Rational(-1), kfun));
  const Functional inv = conv_inverse_geometric(phi);
  const Functional right_b = exp_right(bfun);
  for (const Word& w : words_up_to(letters, table.max_degree)) {
    if (left.value(w) != phi.value(w))
      return label + ": E_<(kappa) != Phi on word " + word_to_string(w);
    if (right_neg.value(w) != inv.value(w))
      return label + ": E_>(-kappa) != Phi^{-1} on word " + word_to_string(w);
    if (right_b.value(w) != phi.value(w))
      return label + ": E_>(beta) != Phi on word " + word_to_string(w);
  }
  return "";
}

inline std::string check_shuffle_identity(int degree, unsigned seed) {
  const Functional f = hashed_functional(seed);
  const Functional g = hashed_functional(seed + 1);
  const Functional h = hashed_functional(seed + 2);
  const Functional lhs = half_shuffle_left(half_shuffle_right(f, g), h);
  const Functional rhs = half_shuffle_right(f, half_shuffle_left(g, h));
  for (const BarMonomial& m : composition_monomials(degree))
    if (lhs.value(m) != rhs.value(m))
      return "(f>g)<h != f>(g<h) on " + bar_monomial_to_string(m);
  return "";
}

inline std::string check_wick(const MomentTable& table, int up_to, const std::string& label) {
  if (!(wick_coproduct_element(TensorElement::unit(1), table) == TensorElement::unit(1)))
    return label + ": W(1) != 1";
  const Functional phi = character_from_moments(table);
  for (const Word& w : words_up_to(static_cast<int>(table.alphabet.size()), up_to)) {
    const TensorElement a = wick(w, table, "coproduct");
    if (!(a == wick(w, table, "interval")))
      return label + ": wick coproduct vs interval on word " + word_to_string(w);
    if (!(a == wick(w, table, "schroder")))
      return label + ": wick coproduct vs schroder on word " + word_to_string(w);
    if (phi.value(a) != 0) return label + ": Phi(W(w)) != 0 on word " + word_to_string(w);
  }
  return "";
}

inline std::string check_counting_identities(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    const NcPartition one = nc_one(n);
    const NcPartition one_hat = nc_one(n + 1);
    for (const NcPartition& p : enum_nc(n)) {
      Rational hat = moebius_nc(hat_extension(p), one_hat);
      if (hat < 0) hat = -hat;
      if (Rational(count_trees_for_ncp(p)) != hat)
        return "tree count vs |Moebius(hat)| at " + partition_to_string(p);
      Rational plain = moebius_nc(p, one);
      if (plain < 0) plain = -plain;
      if (Rational(count_prime_trees_for_ncp(p)) != plain)
        return "prime tree count vs |Moebius| at " + partition_to_string(p);
    }
  }
  return "";
}

inline std::string check_moebius_catalan(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    Rational expected(catalan(static_cast<unsigned>(n - 1)));
    if (n % 2 == 0) expected = -expected;
    if (moebius_nc(nc_zero(n), nc_one(n)) != expected)
      return "Moebius(0,1) in NC(" + std::to_string(n) + ") is not signed Catalan";
  }
  return "";
}

// ---------------------------------------------------------------------------
// Runner.

inline std::vector<CheckResult> run(const Options& opts) {
  if (opts.degree < 1 || opts.degree > 6)
    throw DomainError("verify degree must be between 1 and 6");
  if (opts.tables < 1) throw DomainError("verify needs at least one table");
  const int d = opts.degree;
  const int hopf_cap = std::min(d, 5);
  const int inverse_cap = std::min(d, 5);

  std::vector<Word> antipode_words = permutation_words(std::min(d, 6));
  for (const Word& w : repeated_letter_words(d)) antipode_words.push_back(w);
  std::vector<Word> conv_words = permutation_words(std::min(d, 4));
  if (d >= 5) conv_words.push_back(identity_word(5));
  if (d >= 6) conv_words.push_back(identity_word(6));
  for (const Word& w : repeated_letter_words(d)) conv_words.push_back(w);
  std::vector<Word> iterated_words = permutation_words(std::min(hopf_cap, 4));
  if (hopf_cap >= 5) iterated_words.push_back(identity_word(5));
  for (const Word& w : repeated_letter_words(hopf_cap)) iterated_words.push_back(w);

  std::vector<MomentTable> tables;
  for (int i = 0; i < opts.tables; ++i)
    tables.push_back(random_moment_table(2, d, opts.seed + static_cast<unsigned>(i)));

  std::vector<std::pair<std::string, std::function<std::string()>>> checks;
  checks.emplace_back("enumeration-counts", [d] {
    return check_enumeration_counts(std::min(d + 3, 9), std::min(d + 4, 10),
                                    std::min(d + 3, 9), std::min(d + 2, 8));
  });
  checks.emplace_back("antipode-three-way",
                      [antipode_words] { return check_antipode_three_way(antipode_words); });
  checks.emplace_back("antipode-conv-identity",
                      [conv_words] { return check_antipode_conv_identity(conv_words); });
  checks.emplace_back("antipode-axiom",
                      [antipode_words] { return check_antipode_axiom(antipode_words); });
  checks.emplace_back("iterated-coproduct-theorem",
                      [iterated_words] { return check_iterated_theorem(iterated_words); });
  checks.emplace_back("forest-coproduct",
                      [hopf_cap] { return check_forest_coproduct(hopf_cap); });
  checks.emplace_back("cancellation-lemma",
                      [hopf_cap] { return check_cancellation_lemma(hopf_cap); });
  checks.emplace_back("coassociativity",
                      [hopf_cap] { return check_coassociativity(hopf_cap); });
  checks.emplace_back("coproduct-splitting", [iterated_words] {
    return check_coproduct_splitting(iterated_words);
  });
  checks.emplace_back("symmetric-variant",
                      [hopf_cap] { return check_sym_variant(hopf_cap); });
  checks.emplace_back("cumulant-method-agreement", [tables] {
    for (std::size_t i = 0; i < tables.size(); ++i) {
      const std::string msg =
          check_cumulant_method_agreement(tables[i], "table " + std::to_string(i));
      if (!msg.empty()) return msg;
    }
    return std::string();
  });
  checks.emplace_back("moment-cumulant-round-trips", [tables, opts] {
    for (std::size_t i = 0; i < tables.size(); ++i) {
      const std::string msg = check_round_trips(
          tables[i], opts.seed + static_cast<unsigned>(i), "table " + std::to_string(i));
      if (!msg.empty()) return msg;
    }
    return std::string();
  });
  checks.emplace_back("conv-inverse-agreement", [tables, inverse_cap] {
    for (std::size_t i = 0; i < tables.size(); ++i) {
      const std::string msg =
          check_conv_inverse_agreement(tables[i], inverse_cap, "table " + std::to_string(i));
      if (!msg.empty()) return msg;
    }
    return std::string();
  });
  checks.emplace_back("fixed-point-link", [tables] {
    for (std::size_t i = 0; i < tables.size(); ++i) {
      const std::string msg = check_fixed_point_link(tables[i], "table " + std::to_string(i));
      if (!msg.empty()) return msg;
    }
    return std::string();
  });
  checks.emplace_back("exp-log-inverse", [d, opts] {
    return check_exp_log_inverse(2, std::min(d, 5), opts.seed + 1000);
  });
  checks.emplace_back("half-shuffle-exponentials", [tables, inverse_cap, opts] {
    MomentTable capped = tables[0];
    if (capped.max_degree > inverse_cap) {
      capped.max_degree = inverse_cap;
      for (auto it = capped.values.begin(); it != capped.values.end();)
        it = it->first.size() > inverse_cap ? capped.values.erase(it) : std::next(it);
    }
    return check_half_shuffle_exponentials(capped, "table 0");
  });
  checks.emplace_back("shuffle-identity", [d, opts] {
    return check_shuffle_identity(std::min(d, 4), opts.seed + 2000);
  });
  checks.emplace_back("wick-methods", [tables, inverse_cap] {
    for (std::size_t i = 0; i < tables.size(); ++i) {
      const std::string msg = check_wick(tables[i], inverse_cap, "table " + std::to_string(i));
      if (!msg.empty()) return msg;
    }
    return std::string();
  });
  checks.emplace_back("counting-identities",
                      [d] { return check_counting_identities(std::min(d, 6)); });
  checks.emplace_back("moebius-catalan", [] { return check_moebius_catalan(7); });

  std::vector<CheckResult> results(checks.size());
  const int jobs = std::max(opts.jobs, 1);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= checks.size()) break;
      CheckResult r;
      r.name = checks[i].first;
      try {
        r.detail = checks[i].second();
        r.passed = r.detail.empty();
      } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
      }
      results[i] = std::move(r);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return results;
}

inline Json report_to_json(const std::vector<CheckResult>& results, const Options& opts) {
  Json checks = Json::array();
  int failed = 0;
  for (const auto& r : results) {
    Json entry{{"name", r.name}, {"passed", r.passed}};
    if (!r.passed) {
      entry["detail"] = r.detail;
      ++failed;
    }
    checks.push_back(std::move(entry));
  }
  return Json{{"degree", opts.degree},
              {"seed", opts.seed},
              {"tables", opts.tables},
              {"checks", std::move(checks)},
              {"passed", failed == 0}};
}

}  // namespace schroder::verify
