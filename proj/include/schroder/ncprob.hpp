#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "schroder/errors.hpp"
#include "schroder/functional.hpp"
#include "schroder/hopf.hpp"
#include "schroder/partitions.hpp"
#include "schroder/trees.hpp"
#include "schroder/words.hpp"

namespace schroder {

enum class CumulantKind { Free, Boolean, Monotone };

inline std::string kind_to_string(CumulantKind k) {
  switch (k) {
    case CumulantKind::Free: return "free";
    case CumulantKind::Boolean: return "boolean";
    case CumulantKind::Monotone: return "monotone";
  }
  throw DomainError("unknown cumulant kind");
}

inline CumulantKind parse_kind(const std::string& s) {
  if (s == "free") return CumulantKind::Free;
  if (s == "boolean") return CumulantKind::Boolean;
  if (s == "monotone") return CumulantKind::Monotone;
  throw DomainError("unknown cumulant kind: " + s);
}

// All words over letters 1..letters of length 1..max_degree, in graded order.
inline std::vector<Word> words_up_to(int letters, int max_degree) {
  if (letters < 1) throw DomainError("alphabet must be nonempty");
  std::vector<Word> out;
  for (int len = 1; len <= max_degree; ++len) {
    Word w;
    w.letters.assign(len, 1);
    for (;;) {
      out.push_back(w);
      int i = len - 1;
      while (i >= 0 && w.letters[i] == letters) w.letters[i--] = 1;
      if (i < 0) break;
      ++w.letters[i];
    }
  }
  return out;
}

// Moment data: a total table on every word over the alphabet up to the cap.
// Missing entries are a hard error, never an implicit zero.
struct MomentTable {
  std::vector<std::string> alphabet;
  int max_degree = 0;
  std::map<Word, Rational> values;

  const Rational& value(const Word& w) const {
    auto it = values.find(w);
    if (it == values.end()) throw MissingMomentError(word_to_string(w));
    return it->second;
  }
};

struct CumulantTable {
  std::vector<std::string> alphabet;
  int max_degree = 0;
  CumulantKind kind = CumulantKind::Free;
  std::map<Word, Rational> values;

  const Rational& value(const Word& w) const {
    auto it = values.find(w);
    if (it == values.end()) throw MissingMomentError(word_to_string(w));
    return it->second;
  }
};

namespace detail {

inline void validate_table_grid(const std::vector<std::string>& alphabet, int max_degree,
                                const std::map<Word, Rational>& values) {
  if (alphabet.empty()) throw DomainError("alphabet must be nonempty");
  if (max_degree < 0) throw DomainError("max_degree must be nonnegative");
  const int letters = static_cast<int>(alphabet.size());
  std::size_t expected = 0;
  for (int len = 1; len <= max_degree; ++len) {
    std::size_t count = 1;
    for (int i = 0; i < len; ++i) count *= static_cast<std::size_t>(letters);
    expected += count;
  }
  if (values.size() != expected)
    throw DomainError("table does not cover the alphabet grid exactly");
  for (const auto& [w, v] : values) {
    if (w.size() < 1 || w.size() > max_degree)
      throw DomainError("table key outside degree range: " + word_to_string(w));
    for (Letter l : w.letters)
      if (l < 1 || l > letters)
        throw DomainError("table key uses letter outside alphabet: " + word_to_string(w));
  }
}

}  // namespace detail

inline void validate_moment_table(const MomentTable& t) {
  detail::validate_table_grid(t.alphabet, t.max_degree, t.values);
}

inline void validate_cumulant_table(const CumulantTable& t) {
  detail::validate_table_grid(t.alphabet, t.max_degree, t.values);
}

inline Functional character_from_moments(const MomentTable& t) {
  auto shared = std::make_shared<MomentTable>(t);
  return Functional::character([shared](const Word& w) { return shared->value(w); },
                               t.max_degree);
}

inline Functional infinitesimal_from_cumulants(const CumulantTable& t) {
  auto shared = std::make_shared<CumulantTable>(t);
  return Functional::infinitesimal([shared](const Word& w) { return shared->value(w); },
                                   t.max_degree);
}

inline Rational character_eval(const MomentTable& t, const TensorElement& x) {
  return character_from_moments(t).value(x);
}

namespace detail {

// Per-degree digest of every Schroeder tree: position blocks of pi(t) with
// the root block first, plus the data the cumulant formulas weight trees by.
struct TreeTerm {
  std::vector<std::vector<int>> blocks;
  int internal_count = 0;
  bool prime = false;
  bool boolean_tree = false;
  Rational murua;
};

inline const std::vector<TreeTerm>& tree_terms(int n) {
  static std::map<int, std::vector<TreeTerm>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<TreeTerm> terms;
  for_each_schroder(n, [&](const SchroederTree& t) {
    TreeTerm term;
    const TreeAnalysis a = analyze(t);
    term.blocks = a.blocks;
    term.internal_count = a.skeleton.size();
    term.prime = is_prime(t);
    term.boolean_tree = is_boolean(t);
    term.murua = murua_coefficient(t);
    terms.push_back(std::move(term));
  });
  return cache.emplace(n, std::move(terms)).first->second;
}

// Per-degree digest of NC(n): blocks plus the Moebius weights and the
// nesting-forest factorial.
struct NcTerm {
  std::vector<std::vector<int>> blocks;
  int block_count = 0;
  bool interval = false;
  Rational moebius_to_one;
  Rational moebius_hat;
  Integer nesting_factorial;
};

inline const std::vector<NcTerm>& nc_terms(int n) {
  static std::map<int, std::vector<NcTerm>> cache;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<NcTerm> terms;
  const NcPartition one = nc_one(n);
  const NcPartition one_hat = nc_one(n + 1);
  for (const auto& p : enum_nc(n)) {
    NcTerm term;
    term.blocks = p.blocks;
    term.block_count = static_cast<int>(p.blocks.size());
    term.interval = is_interval_partition(p);
    term.moebius_to_one = moebius_nc(p, one);
    term.moebius_hat = moebius_nc(hat_extension(p), one_hat);
    term.nesting_factorial = forest_factorial(p);
    terms.push_back(std::move(term));
  }
  std::lock_guard<std::mutex> lock(mtx);
  return cache.emplace(n, std::move(terms)).first->second;
}

template <typename Table>
Rational block_product(const Table& t, const Word& w,
                       const std::vector<std::vector<int>>& blocks) {
  Rational acc(1);
  for (const auto& b : blocks) acc *= t.value(restrict_word(w, b));
  return acc;
}

// 1-based positions of the set bits of mask, grouped into consecutive runs.
inline std::vector<std::vector<int>> mask_components(int n, std::uint32_t mask) {
  std::vector<std::vector<int>> comps;
  int i = 0;
  while (i < n) {
    if (!((mask >> i) & 1u)) {
      ++i;
      continue;
    }
    std::vector<int> run;
    while (i < n && ((mask >> i) & 1u)) run.push_back(++i);
    comps.push_back(std::move(run));
  }
  return comps;
}

}  // namespace detail

inline std::string default_cumulant_method(CumulantKind kind) {
  switch (kind) {
    case CumulantKind::Free: return "prime-trees";
    case CumulantKind::Boolean: return "boolean-trees";
    case CumulantKind::Monotone: return "omega-trees";
  }
  throw DomainError("unknown cumulant kind");
}

// Moment-to-cumulant transforms. Every kind has one partition-sum route, one
// tree route and (for free/boolean) a half-shuffle route or (monotone) the
// convolution logarithm; all routes of a kind must agree.
inline CumulantTable cumulants_from_moments(CumulantKind kind, const MomentTable& table,
                                            const std::string& method) {
  validate_moment_table(table);
  CumulantTable out;
  out.alphabet = table.alphabet;
  out.max_degree = table.max_degree;
  out.kind = kind;

  enum class Route { NcSum, Trees, Shuffle, Log } route;
  if (kind == CumulantKind::Free) {
    if (method == "moebius") route = Route::NcSum;
    else if (method == "prime-trees") route = Route::Trees;
    else if (method == "shuffle") route = Route::Shuffle;
    else throw DomainError("unknown free-cumulant method: " + method);
  } else if (kind == CumulantKind::Boolean) {
    if (method == "intervals") route = Route::NcSum;
    else if (method == "boolean-trees") route = Route::Trees;
    else if (method == "shuffle") route = Route::Shuffle;
    else throw DomainError("unknown boolean-cumulant method: " + method);
  } else {
    if (method == "omega-trees") route = Route::Trees;
    else if (method == "conv-log") route = Route::Log;
    else throw DomainError("unknown monotone-cumulant method: " + method);
  }

  Functional evaluator;
  if (route == Route::Shuffle) {
    const Functional phi = character_from_moments(table);
    const Functional bare = functional_sub(phi, Functional::counit_functional());
    const Functional inv = conv_inverse_geometric(phi);
    evaluator = kind == CumulantKind::Free ? half_shuffle_left(bare, inv)
                                           : half_shuffle_right(inv, bare);
  } else if (route == Route::Log) {
    evaluator = conv_log(character_from_moments(table));
  }

  for (const Word& w : words_up_to(static_cast<int>(table.alphabet.size()), table.max_degree)) {
    const int n = w.size();
    Rational v(0);
    switch (route) {
      case Route::NcSum:
        for (const auto& term : detail::nc_terms(n)) {
          if (kind == CumulantKind::Free) {
            v += term.moebius_to_one * detail::block_product(table, w, term.blocks);
          } else if (term.interval) {
            Rational p = detail::block_product(table, w, term.blocks);
            if (term.block_count % 2 == 0) p = -p;
            v += p;
          }
        }
        break;
      case Route::Trees:
        for (const auto& term : detail::tree_terms(n)) {
          if (kind == CumulantKind::Free && !term.prime) continue;
          if (kind == CumulantKind::Boolean && !term.boolean_tree) continue;
          Rational p = detail::block_product(table, w, term.blocks);
          if (kind == CumulantKind::Monotone) {
            p *= term.murua;
          } else if (term.internal_count % 2 == 0) {
            p = -p;
          }
          v += p;
        }
        break;
      case Route::Shuffle:
      case Route::Log:
        v = evaluator.value(w);
        break;
    }
    out.values.emplace(w, std::move(v));
  }
  return out;
}

inline CumulantTable cumulants_from_moments(CumulantKind kind, const MomentTable& table) {
  return cumulants_from_moments(kind, table, default_cumulant_method(kind));
}

// Partition-sum moment evaluation: NC(n) for free, interval partitions for
// boolean, NC(n) weighted by the inverse nesting-forest factorial for
// monotone cumulants.
inline MomentTable moments_from_cumulants(CumulantKind kind, const CumulantTable& table) {
  validate_cumulant_table(table);
  MomentTable out;
  out.alphabet = table.alphabet;
  out.max_degree = table.max_degree;
  for (const Word& w : words_up_to(static_cast<int>(table.alphabet.size()), table.max_degree)) {
    Rational v(0);
    for (const auto& term : detail::nc_terms(w.size())) {
      if (kind == CumulantKind::Boolean && !term.interval) continue;
      Rational p = detail::block_product(table, w, term.blocks);
      if (kind == CumulantKind::Monotone) p /= Rational(term.nesting_factorial);
      v += p;
    }
    out.values.emplace(w, std::move(v));
  }
  return out;
}

// kappa from the left fixed point Phi = eps + kappa < Phi.
inline CumulantTable free_cumulants_fixed_point(const MomentTable& table) {
  validate_moment_table(table);
  CumulantTable out;
  out.alphabet = table.alphabet;
  out.max_degree = table.max_degree;
  out.kind = CumulantKind::Free;
  std::map<Word, Rational> memo;
  std::function<Rational(const Word&)> kappa = [&](const Word& w) -> Rational {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    const int n = w.size();
    Rational v = table.value(w);
    const std::uint32_t full = (1u << n) - 1u;
    for (std::uint32_t mask = 1; mask != full; mask += 2) {
      Rational part = kappa(detail::subword(w, mask));
      for (const auto& comp : detail::mask_components(n, full & ~mask))
        part *= table.value(restrict_word(w, comp));
      v -= part;
    }
    return memo.emplace(w, std::move(v)).first->second;
  };
  for (const Word& w : words_up_to(static_cast<int>(table.alphabet.size()), table.max_degree))
    out.values.emplace(w, kappa(w));
  return out;
}

// beta from the right fixed point Phi = eps + Phi > beta.
inline CumulantTable boolean_cumulants_fixed_point(const MomentTable& table) {
  validate_moment_table(table);
  CumulantTable out;
  out.alphabet = table.alphabet;
  out.max_degree = table.max_degree;
  out.kind = CumulantKind::Boolean;
  std::map<Word, Rational> memo;
  std::function<Rational(const Word&)> beta = [&](const Word& w) -> Rational {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    const int n = w.size();
    Rational v = table.value(w);
    for (int j = 1; j < n; ++j) {
      Word prefix, suffix;
      prefix.letters.assign(w.letters.begin(), w.letters.begin() + j);
      suffix.letters.assign(w.letters.begin() + j, w.letters.end());
      v -= beta(prefix) * table.value(suffix);
    }
    return memo.emplace(w, std::move(v)).first->second;
  };
  for (const Word& w : words_up_to(static_cast<int>(table.alphabet.size()), table.max_degree))
    out.values.emplace(w, beta(w));
  return out;
}

inline const std::string kDefaultInverseMethod = "antipode";

// Phi^{*-1} on words, by four routes: the cancellation-free antipode, the
// geometric convolution series, the Moebius sum over NC(n+1) through the hat
// extension, and the interval-partition sum over free cumulants.
inline MomentTable conv_inverse(const MomentTable& table, const std::string& method,
                                int up_to_degree = -1) {
  validate_moment_table(table);
  const int cap = up_to_degree < 0 ? table.max_degree
                                   : std::min(up_to_degree, table.max_degree);
  MomentTable out;
  out.alphabet = table.alphabet;
  out.max_degree = cap;

  if (method == "antipode" || method == "geometric") {
    const Functional phi = character_from_moments(table);
    const Functional inv = method == "antipode" ? compose_antipode(phi)
                                                : conv_inverse_geometric(phi);
    for (const Word& w : words_up_to(static_cast<int>(table.alphabet.size()), cap))
      out.values.emplace(w, inv.value(w));
    return out;
  }
  if (method == "moebius") {
    for (const Word& w : words_up_to(static_cast<int>(table.alphabet.size()), cap)) {
      Rational v(0);
      for (const auto& term : detail::nc_terms(w.size()))
        v += term.moebius_hat * detail::block_product(table, w, term.blocks);
      out.values.emplace(w, std::move(v));
    }
    return out;
  }
  if (method == "intervals") {
    const CumulantTable k = cumulants_from_moments(CumulantKind::Free, table, "moebius");
    for (const Word& w : words_up_to(static_cast<int>(table.alphabet.size()), cap)) {
      Rational v(0);
      for (const auto& term : detail::nc_terms(w.size())) {
        if (!term.interval) continue;
        Rational p = detail::block_product(k, w, term.blocks);
        if (term.block_count % 2) p = -p;
        v += p;
      }
      out.values.emplace(w, std::move(v));
    }
    return out;
  }
  throw DomainError("unknown inverse method: " + method);
}

inline const std::string kDefaultWickMethod = "schroder";

// W = (id (x) Phi^{*-1}) Delta on a rank-1 element; handles the unit and bar
// monomials alike.
inline TensorElement wick_coproduct_element(const TensorElement& x, const MomentTable& table) {
  if (x.rank() != 1) throw DomainError("wick expects rank 1");
  const Functional inv = conv_inverse_geometric(character_from_moments(table));
  TensorElement out(1);
  for (const auto& [key, c] : x.terms()) {
    const Rational coeff = c;
    detail::for_each_coproduct_pair(key[0], 0, [&](BarMonomial&& l, BarMonomial&& r) {
      out.add({std::move(l)}, Rational(coeff * inv.value(r)));
    });
  }
  return out;
}

inline TensorElement wick(const Word& w, const MomentTable& table,
                          const std::string& method = kDefaultWickMethod) {
  validate_word(w);
  validate_moment_table(table);
  const int n = w.size();
  if (method == "coproduct") return wick_coproduct_element(TensorElement::from_word(w), table);
  TensorElement out(1);
  if (method == "interval") {
    // Coefficient of w_B: over each component of the complement, the
    // interval-partition sum of signed free cumulants.
    const CumulantTable k = cumulants_from_moments(CumulantKind::Free, table, "moebius");
    const std::uint32_t full = (1u << n) - 1u;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      Rational coeff(1);
      for (const auto& comp : detail::mask_components(n, full & ~mask)) {
        Rational s(0);
        for (const auto& term : detail::nc_terms(static_cast<int>(comp.size()))) {
          if (!term.interval) continue;
          Rational p(1);
          for (const auto& b : term.blocks) {
            std::vector<int> abs_pos;
            for (int rel : b) abs_pos.push_back(comp[rel - 1]);
            p *= k.value(restrict_word(w, abs_pos));
          }
          if (term.block_count % 2) p = -p;
          s += p;
        }
        coeff *= s;
      }
      BarMonomial m;
      if (mask) m.words.push_back(detail::subword(w, mask));
      out.add({std::move(m)}, coeff);
    }
    return out;
  }
  if (method == "schroder") {
    // W(w) = sum over trees of (-1)^{i(t)-1} (w_{B_r} - Phi(w_{B_r}) 1)
    // times the product of Phi over the non-root blocks.
    for (const auto& term : detail::tree_terms(n)) {
      Rational p(1);
      for (std::size_t v = 1; v < term.blocks.size(); ++v)
        p *= table.value(restrict_word(w, term.blocks[v]));
      if (term.internal_count % 2 == 0) p = -p;
      const Word root = restrict_word(w, term.blocks[0]);
      out.add({BarMonomial{{root}}}, p);
      out.add({BarMonomial{}}, Rational(-p * table.value(root)));
    }
    return out;
  }
  throw DomainError("unknown wick method: " + method);
}

inline std::map<SchroederTree, Rational> murua_table(int n, int cap = kDefaultEnumCap) {
  std::map<SchroederTree, Rational> out;
  for_each_schroder(n, [&](const SchroederTree& t) { out.emplace(t, murua_coefficient(t)); },
                    cap);
  return out;
}

}  // namespace schroder
