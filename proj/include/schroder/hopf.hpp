#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "schroder/errors.hpp"
#include "schroder/partitions.hpp"
#include "schroder/poset.hpp"
#include "schroder/trees.hpp"
#include "schroder/words.hpp"

namespace schroder {

namespace detail {

inline constexpr int kMaxWordBits = 24;

inline void check_word_size(const Word& w) {
  if (w.size() > kMaxWordBits) throw SizeLimitError("word too long for coproduct machinery");
}

// Letters at the set bits of mask (bit i = position i+1).
inline Word subword(const Word& w, std::uint32_t mask) {
  Word r;
  for (int i = 0; i < w.size(); ++i)
    if ((mask >> i) & 1u) r.letters.push_back(w.letters[i]);
  return r;
}

// Maximal runs of consecutive set bits, left to right.
inline void append_runs(const Word& w, std::uint32_t mask, std::vector<Word>& out) {
  int i = 0;
  while (i < w.size()) {
    if (!((mask >> i) & 1u)) {
      ++i;
      continue;
    }
    Word run;
    while (i < w.size() && ((mask >> i) & 1u)) run.letters.push_back(w.letters[i++]);
    out.push_back(std::move(run));
  }
}

// All splittings of a basis monomial into (left restriction, right remainder):
// per word an arbitrary subset goes left as a restriction, the complement
// goes right split into its connected components. first_word_rule constrains
// the first word's subset: 0 none, +1 must contain position 1, -1 must not.
inline void for_each_coproduct_pair(const BarMonomial& m, int first_word_rule,
                                    const std::function<void(BarMonomial&&, BarMonomial&&)>& fn) {
  const int r = m.bar_count();
  if (r == 0) {
    if (first_word_rule != 0) return;  // half-coproducts live on the augmentation ideal
    fn(BarMonomial{}, BarMonomial{});
    return;
  }
  for (const auto& w : m.words) check_word_size(w);
  std::vector<std::uint32_t> masks(r, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == r) {
      BarMonomial left, right;
      for (int j = 0; j < r; ++j) {
        if (masks[j]) left.words.push_back(subword(m.words[j], masks[j]));
        const std::uint32_t full = (1u << m.words[j].size()) - 1u;
        append_runs(m.words[j], full & ~masks[j], right.words);
      }
      fn(std::move(left), std::move(right));
      return;
    }
    const std::uint32_t full = (1u << m.words[i].size()) - 1u;
    for (std::uint32_t mask = 0;; ++mask) {
      if (i == 0 && first_word_rule == 1 && !(mask & 1u)) {
        if (mask == full) break;
        continue;
      }
      if (i == 0 && first_word_rule == -1 && (mask & 1u)) {
        if (mask == full) break;
        continue;
      }
      masks[i] = mask;
      rec(i + 1);
      if (mask == full) break;
    }
    masks[i] = 0;
  };
  rec(0);
}

}  // namespace detail

// Delta(w) = sum_{I subset [n]} w_I (x) w^(I), extended multiplicatively to
// bar monomials (slotwise bar products) and linearly.
inline TensorElement coproduct(const TensorElement& x) {
  if (x.rank() != 1) throw DomainError("coproduct expects rank 1");
  TensorElement out(2);
  for (const auto& [key, c] : x.terms()) {
    const Rational coeff = c;
    detail::for_each_coproduct_pair(key[0], 0, [&](BarMonomial&& l, BarMonomial&& r) {
      out.add({std::move(l), std::move(r)}, coeff);
    });
  }
  return out;
}

inline TensorElement reduced_coproduct(const TensorElement& x) {
  if (x.rank() != 1) throw DomainError("reduced coproduct expects rank 1");
  TensorElement out(2);
  for (const auto& [key, c] : x.terms()) {
    if (key[0].is_unit())
      throw DomainError("reduced coproduct is defined on the augmentation ideal");
    const Rational coeff = c;
    detail::for_each_coproduct_pair(key[0], 0, [&](BarMonomial&& l, BarMonomial&& r) {
      if (l.is_unit() || r.is_unit()) return;
      out.add({std::move(l), std::move(r)}, coeff);
    });
  }
  return out;
}

// Delta_<(w): the first slot keeps position 1 of the first word.
// Delta_>(w): the first slot avoids it. Both extend by
// Delta_?(w_1|...|w_r) = Delta_?(w_1) Delta(w_2) ... Delta(w_r).
inline TensorElement half_coproduct_left(const TensorElement& x) {
  if (x.rank() != 1) throw DomainError("half coproduct expects rank 1");
  TensorElement out(2);
  for (const auto& [key, c] : x.terms()) {
    if (key[0].is_unit())
      throw DomainError("half coproducts are defined on the augmentation ideal");
    const Rational coeff = c;
    detail::for_each_coproduct_pair(key[0], 1, [&](BarMonomial&& l, BarMonomial&& r) {
      out.add({std::move(l), std::move(r)}, coeff);
    });
  }
  return out;
}

inline TensorElement half_coproduct_right(const TensorElement& x) {
  if (x.rank() != 1) throw DomainError("half coproduct expects rank 1");
  TensorElement out(2);
  for (const auto& [key, c] : x.terms()) {
    if (key[0].is_unit())
      throw DomainError("half coproducts are defined on the augmentation ideal");
    const Rational coeff = c;
    detail::for_each_coproduct_pair(key[0], -1, [&](BarMonomial&& l, BarMonomial&& r) {
      out.add({std::move(l), std::move(r)}, coeff);
    });
  }
  return out;
}

// Slotwise bar concatenation with bilinear coefficients.
inline TensorElement bar_product(const TensorElement& x, const TensorElement& y) {
  if (x.rank() != y.rank()) throw DomainError("bar product rank mismatch");
  TensorElement out(x.rank());
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      std::vector<BarMonomial> key(x.rank());
      for (int i = 0; i < x.rank(); ++i) key[i] = bar_concat(kx[i], ky[i]);
      out.add(key, Rational(cx * cy));
    }
  return out;
}

namespace detail {

inline TensorElement expand_last_slot(const TensorElement& x, bool reduced) {
  TensorElement out(x.rank() + 1);
  for (const auto& [key, c] : x.terms()) {
    const Rational coeff = c;
    for_each_coproduct_pair(key.back(), 0, [&](BarMonomial&& l, BarMonomial&& r) {
      if (reduced && (l.is_unit() || r.is_unit())) return;
      std::vector<BarMonomial> nk(key.begin(), key.end() - 1);
      nk.push_back(std::move(l));
      nk.push_back(std::move(r));
      out.add(nk, coeff);
    });
  }
  return out;
}

}  // namespace detail

// Delta^[k]: k = 1 is the identity, k = 2 the coproduct, then nest on the
// last slot.
inline TensorElement iterated_coproduct(const TensorElement& x, int k) {
  if (x.rank() != 1) throw DomainError("iterated coproduct expects rank 1");
  if (k < 1) throw DomainError("iteration depth must be >= 1");
  TensorElement cur = x;
  for (int i = 1; i < k; ++i) cur = detail::expand_last_slot(cur, false);
  return cur;
}

// Reduced variant on the augmentation ideal; vanishes on terms whose degree
// cannot be split into k nonempty parts.
inline TensorElement iterated_reduced_coproduct(const TensorElement& x, int k) {
  if (x.rank() != 1) throw DomainError("iterated coproduct expects rank 1");
  if (k < 1) throw DomainError("iteration depth must be >= 1");
  for (const auto& [key, c] : x.terms())
    if (key[0].is_unit())
      throw DomainError("reduced coproduct is defined on the augmentation ideal");
  TensorElement cur = x;
  for (int i = 1; i < k; ++i) cur = detail::expand_last_slot(cur, true);
  return cur;
}

// m^[k]: concatenate the k slots of every term into one bar monomial.
inline TensorElement multiply_slots(const TensorElement& x) {
  TensorElement out(1);
  for (const auto& [key, c] : x.terms()) {
    BarMonomial m;
    for (const auto& slot : key) m = bar_concat(m, slot);
    out.add({std::move(m)}, c);
  }
  return out;
}

inline Rational counit(const TensorElement& x) {
  if (x.rank() != 1) throw DomainError("counit expects rank 1");
  return x.coefficient({BarMonomial{}});
}

// f-bar of a k-linearization: the bijective refinement that orders vertices
// by level and breaks ties by planar rank. Returns the position (1-based) of
// every vertex in that order.
inline Linearization linearization_refinement(const Linearization& f) {
  const int n = static_cast<int>(f.size());
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) { return f[a] < f[b]; });
  Linearization fbar(n);
  for (int pos = 0; pos < n; ++pos) fbar[ids[pos]] = pos + 1;
  return fbar;
}

namespace detail {

// c(w,t,f): slot j carries the blocks of the level-j vertices as restrictions
// of w, barred in planar order (the order induced by f-bar within a level).
inline std::vector<BarMonomial> iterated_term(const Word& w, const TreeAnalysis& a,
                                              const Linearization& f, int k) {
  std::vector<BarMonomial> key(k);
  for (int v = 0; v < a.skeleton.size(); ++v) {
    std::vector<int> setpos = a.blocks[v];
    key[f[v] - 1].words.push_back(restrict_word(w, setpos));
  }
  return key;
}

}  // namespace detail

// Sum over Schroeder trees of degree n and k-linearizations of their
// skeletons; equals the k-fold reduced coproduct of w.
inline TensorElement schroder_iterated_terms(const Word& w, int k, int cap = kDefaultEnumCap) {
  validate_word(w);
  const int n = w.size();
  if (k < 1) throw DomainError("iteration depth must be >= 1");
  TensorElement out(k);
  for_each_schroder(n, [&](const SchroederTree& t) {
    const TreeAnalysis a = analyze(t);
    for_each_k_linearization(a.skeleton, k, [&](const Linearization& f) {
      out.add(detail::iterated_term(w, a, f, k), 1);
    });
  }, cap);
  return out;
}

// Reduced coproduct of a bar monomial as a sum over forests of Schroeder
// trees (one per word) and 2-linearizations of the forest skeleton: the left
// slot collects the root blocks of the level-1 roots, the right slot all
// level-2 blocks, tree by tree in planar order.
inline TensorElement forest_coproduct_terms(const BarMonomial& m, int cap = kDefaultEnumCap) {
  if (m.is_unit()) throw DomainError("forest coproduct is defined on the augmentation ideal");
  const int r = m.bar_count();
  std::vector<std::vector<SchroederTree>> choices(r);
  for (int i = 0; i < r; ++i) {
    validate_word(m.words[i]);
    choices[i] = enum_schroder(m.words[i].size(), cap);
  }
  TensorElement out(2);
  std::vector<const SchroederTree*> forest(r);
  std::function<void(int)> rec = [&](int i) {
    if (i < r) {
      for (const auto& t : choices[i]) {
        forest[i] = &t;
        rec(i + 1);
      }
      return;
    }
    std::vector<TreeAnalysis> analyses(r);
    ForestPoset combined;
    std::vector<int> offset(r, 0);
    for (int j = 0; j < r; ++j) {
      analyses[j] = analyze(*forest[j]);
      offset[j] = combined.size();
      for (int v = 0; v < analyses[j].skeleton.size(); ++v) {
        const int p = analyses[j].skeleton.parent[v];
        combined.parent.push_back(p == -1 ? -1 : p + offset[j]);
      }
    }
    for_each_k_linearization(combined, 2, [&](const Linearization& h) {
      BarMonomial left, right;
      for (int j = 0; j < r; ++j) {
        if (h[offset[j]] == 1)
          left.words.push_back(restrict_word(m.words[j], analyses[j].blocks[0]));
        for (int v = 0; v < analyses[j].skeleton.size(); ++v)
          if (h[offset[j] + v] == 2)
            right.words.push_back(restrict_word(m.words[j], analyses[j].blocks[v]));
      }
      out.add({std::move(left), std::move(right)}, 1);
    });
  };
  rec(0);
  return out;
}

// ---------------------------------------------------------------------------
// Antipodes. Four computationally distinct routes; they must agree.

inline TensorElement antipode_takeuchi(const TensorElement& x) {
  if (x.rank() != 1) throw DomainError("antipode expects rank 1");
  const Rational unit_part = counit(x);
  TensorElement positive = x;
  positive.add({BarMonomial{}}, -unit_part);
  int max_degree = 0;
  for (const auto& [key, c] : positive.terms())
    max_degree = std::max(max_degree, key[0].degree());
  TensorElement out(1);
  out.add({BarMonomial{}}, unit_part);
  TensorElement layer = positive;  // reduced Delta^[k] of the positive part
  for (int k = 1; k <= max_degree && !layer.is_zero(); ++k) {
    TensorElement flat = multiply_slots(layer);
    out.add_scaled(flat, k % 2 ? Rational(-1) : Rational(1));
    layer = detail::expand_last_slot(layer, true);
  }
  return out;
}

namespace detail {

inline const TensorElement& bogoliubov_monomial(const BarMonomial& m) {
  static std::map<BarMonomial, TensorElement> memo;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
  }
  TensorElement s(1);
  if (m.is_unit()) {
    s.add({BarMonomial{}}, 1);
  } else {
    // S(m) = -m - sum S(m') | m'' over the reduced coproduct of m.
    s.add({m}, -1);
    for_each_coproduct_pair(m, 0, [&](BarMonomial&& l, BarMonomial&& r) {
      if (l.is_unit() || r.is_unit()) return;
      const TensorElement& sl = bogoliubov_monomial(l);
      for (const auto& [key, c] : sl.terms())
        s.add({bar_concat(key[0], r)}, Rational(-c));
    });
  }
  std::lock_guard<std::mutex> lock(mtx);
  return memo.emplace(m, std::move(s)).first->second;
}

}  // namespace detail

inline TensorElement antipode_bogoliubov(const TensorElement& x) {
  if (x.rank() != 1) throw DomainError("antipode expects rank 1");
  TensorElement out(1);
  for (const auto& [key, c] : x.terms())
    out.add_scaled(detail::bogoliubov_monomial(key[0]), c);
  return out;
}

// Cancellation-free formula: S(w) = sum over Schroeder trees of degree n of
// (-1)^{i(t)} w_t, where w_t bars the blocks of pi(t) in the order of the
// unique ascent-free linearization (mirrored pre-order).
inline TensorElement antipode_schroder(const Word& w, int cap = kDefaultEnumCap) {
  validate_word(w);
  TensorElement out(1);
  for_each_schroder(w.size(), [&](const SchroederTree& t) {
    const TreeAnalysis a = analyze(t);
    const Linearization g = ascent_free_linearization(t);
    BarMonomial m;
    m.words.resize(a.skeleton.size());
    for (int v = 0; v < a.skeleton.size(); ++v)
      m.words[g[v] - 1] = restrict_word(w, a.blocks[v]);
    out.add({std::move(m)}, a.skeleton.size() % 2 ? Rational(-1) : Rational(1));
  }, cap);
  return out;
}

// Antihomomorphism extension S(w_1|...|w_r) = S(w_r)|...|S(w_1).
inline TensorElement antipode_schroder(const BarMonomial& m, int cap = kDefaultEnumCap) {
  TensorElement acc = TensorElement::unit(1);
  for (int i = m.bar_count() - 1; i >= 0; --i)
    acc = bar_product(acc, antipode_schroder(m.words[i], cap));
  return acc;
}

inline TensorElement antipode_schroder(const TensorElement& x, int cap = kDefaultEnumCap) {
  if (x.rank() != 1) throw DomainError("antipode expects rank 1");
  TensorElement out(1);
  for (const auto& [key, c] : x.terms()) out.add_scaled(antipode_schroder(key[0], cap), c);
  return out;
}

namespace detail {

// Convolution inverse of the identity, S = sum_k (-1)^k m^[k] pi^{(x)k}
// Delta^[k], evaluated through the chain encoding: a level function sends
// every letter position of every word to a level in [k]. Slot j keeps the
// level-j positions; two of them share a word exactly when every position
// between them sits at level >= j, so each maximal run of positions at
// level >= j contributes one word, restricted to level j. The projection
// pi discards chains missing a level.
inline TensorElement conv_identity_monomial(const BarMonomial& m) {
  TensorElement out(1);
  if (m.is_unit()) {
    out.add({BarMonomial{}}, 1);
    return out;
  }
  const int deg = m.degree();
  const int r = m.bar_count();
  for (int k = 1; k <= deg; ++k) {
    // masks[j][i]: positions of word i at level j+1.
    std::vector<std::vector<std::uint32_t>> masks(k, std::vector<std::uint32_t>(r, 0));
    std::function<void(int, int)> assign = [&](int wi, int pos) {
      if (wi == r) {
        for (int j = 0; j < k; ++j) {
          bool hit = false;
          for (int i = 0; i < r; ++i) hit = hit || masks[j][i];
          if (!hit) return;
        }
        BarMonomial flat;
        for (int j = 0; j < k; ++j)
          for (int i = 0; i < r; ++i) {
            std::uint32_t ge = 0;
            for (int jj = j; jj < k; ++jj) ge |= masks[jj][i];
            const int len = m.words[i].size();
            int p = 0;
            while (p < len) {
              if (!((ge >> p) & 1u)) {
                ++p;
                continue;
              }
              std::uint32_t run = 0;
              while (p < len && ((ge >> p) & 1u)) run |= (1u << p++);
              if (run & masks[j][i])
                flat.words.push_back(subword(m.words[i], run & masks[j][i]));
            }
          }
        out.add({std::move(flat)}, k % 2 ? Rational(-1) : Rational(1));
        return;
      }
      if (pos == m.words[wi].size()) {
        assign(wi + 1, 0);
        return;
      }
      for (int j = 0; j < k; ++j) {
        masks[j][wi] |= (1u << pos);
        assign(wi, pos + 1);
        masks[j][wi] &= ~(1u << pos);
      }
    };
    assign(0, 0);
  }
  return out;
}

}  // namespace detail

inline TensorElement antipode_conv_identity(const TensorElement& x) {
  if (x.rank() != 1) throw DomainError("antipode expects rank 1");
  TensorElement out(1);
  for (const auto& [key, c] : x.terms())
    out.add_scaled(detail::conv_identity_monomial(key[0]), c);
  return out;
}

enum class AntipodeMethod { Schroder, Takeuchi, Bogoliubov, ConvIdentity };

inline AntipodeMethod parse_antipode_method(const std::string& name) {
  if (name == "schroder") return AntipodeMethod::Schroder;
  if (name == "takeuchi") return AntipodeMethod::Takeuchi;
  if (name == "bogoliubov") return AntipodeMethod::Bogoliubov;
  if (name == "conv-identity") return AntipodeMethod::ConvIdentity;
  throw DomainError("unknown antipode method: " + name);
}

inline TensorElement antipode(const TensorElement& x, AntipodeMethod method) {
  switch (method) {
    case AntipodeMethod::Schroder: return antipode_schroder(x);
    case AntipodeMethod::Takeuchi: return antipode_takeuchi(x);
    case AntipodeMethod::Bogoliubov: return antipode_bogoliubov(x);
    case AntipodeMethod::ConvIdentity: return antipode_conv_identity(x);
  }
  throw DomainError("unknown antipode method");
}

// m (S (x) id) Delta(x); equals counit(x) * unit for every x.
inline TensorElement antipode_axiom_lhs(const TensorElement& x, AntipodeMethod method) {
  TensorElement out(1);
  const TensorElement cop = coproduct(x);
  for (const auto& [key, c] : cop.terms()) {
    const TensorElement s = antipode(TensorElement::from_monomial(key[0]), method);
    for (const auto& [skey, sc] : s.terms())
      out.add({bar_concat(skey[0], key[1])}, Rational(c * sc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Commutative (symmetric-algebra) variant.

inline CommElement commutative_projection(const TensorElement& x) {
  if (x.rank() != 1) throw DomainError("projection expects rank 1");
  CommElement out(1);
  for (const auto& [key, c] : x.terms()) out.add({CommMonomial::from_bar(key[0])}, c);
  return out;
}

// Full symmetric coproduct of a commutative monomial: per word a subset goes
// left as a restriction, the split remainder multiplies into the right slot.
inline CommElement sym_coproduct(const CommElement& x) {
  if (x.rank() != 1) throw DomainError("coproduct expects rank 1");
  CommElement out(2);
  for (const auto& [key, c] : x.terms()) {
    const Rational coeff = c;
    const BarMonomial as_bar{key[0].words};
    detail::for_each_coproduct_pair(as_bar, 0, [&](BarMonomial&& l, BarMonomial&& r) {
      out.add({CommMonomial(std::move(l.words)), CommMonomial(std::move(r.words))}, coeff);
    });
  }
  return out;
}

inline CommElement sym_reduced_coproduct_element(const CommElement& x) {
  CommElement out(2);
  const CommElement full = sym_coproduct(x);
  for (const auto& [key, c] : full.terms()) {
    if (key[0].is_unit() || key[1].is_unit()) continue;
    out.add(key, c);
  }
  return out;
}

inline CommElement sym_reduced_coproduct(const Word& w) {
  validate_word(w);
  CommElement x(1);
  x.add({CommMonomial({w})}, 1);
  return sym_reduced_coproduct_element(x);
}

namespace detail {

inline CommElement sym_expand_last_slot(const CommElement& x, bool reduced) {
  CommElement out(x.rank() + 1);
  for (const auto& [key, c] : x.terms()) {
    const Rational coeff = c;
    const BarMonomial as_bar{key.back().words};
    for_each_coproduct_pair(as_bar, 0, [&](BarMonomial&& l, BarMonomial&& r) {
      if (reduced && (l.words.empty() || r.words.empty())) return;
      std::vector<CommMonomial> nk(key.begin(), key.end() - 1);
      nk.emplace_back(std::move(l.words));
      nk.emplace_back(std::move(r.words));
      out.add(nk, coeff);
    });
  }
  return out;
}

}  // namespace detail

// Oracle route: iterate the reduced symmetric coproduct.
inline CommElement sym_iterated_reduced_coproduct(const Word& w, int k) {
  validate_word(w);
  if (k < 1) throw DomainError("iteration depth must be >= 1");
  CommElement cur(1);
  cur.add({CommMonomial({w})}, 1);
  for (int i = 1; i < k; ++i) cur = detail::sym_expand_last_slot(cur, true);
  return cur;
}

// Tree route: same sum as schroder_iterated_terms but each slot forgets the
// bar order (k-linearizations only see the skeleton as a poset).
inline CommElement sym_iterated_terms(const Word& w, int k, int cap = kDefaultEnumCap) {
  validate_word(w);
  if (k < 1) throw DomainError("iteration depth must be >= 1");
  CommElement out(k);
  for_each_schroder(w.size(), [&](const SchroederTree& t) {
    const TreeAnalysis a = analyze(t);
    for_each_k_linearization(a.skeleton, k, [&](const Linearization& f) {
      std::vector<std::vector<Word>> slots(k);
      for (int v = 0; v < a.skeleton.size(); ++v)
        slots[f[v] - 1].push_back(restrict_word(w, a.blocks[v]));
      std::vector<CommMonomial> key;
      key.reserve(k);
      for (auto& s : slots) key.emplace_back(std::move(s));
      out.add(key, 1);
    });
  }, cap);
  return out;
}

// S_S(w) = sum over trees of (-1)^{i(t)} times the multiset of all blocks.
inline CommElement sym_antipode(const Word& w, int cap = kDefaultEnumCap) {
  validate_word(w);
  CommElement out(1);
  for_each_schroder(w.size(), [&](const SchroederTree& t) {
    const TreeAnalysis a = analyze(t);
    std::vector<Word> blocks;
    for (int v = 0; v < a.skeleton.size(); ++v)
      blocks.push_back(restrict_word(w, a.blocks[v]));
    out.add({CommMonomial(std::move(blocks))},
            a.skeleton.size() % 2 ? Rational(-1) : Rational(1));
  }, cap);
  return out;
}

// Independent Takeuchi-style route in the symmetric algebra.
inline CommElement sym_antipode_takeuchi(const Word& w) {
  validate_word(w);
  CommElement acc(1);
  acc.add({CommMonomial({w})}, 1);
  CommElement out(1);
  for (int k = 1; k <= w.size() && !acc.is_zero(); ++k) {
    for (const auto& [key, c] : acc.terms()) {
      CommMonomial prod;
      for (const auto& slot : key) prod = comm_product(prod, slot);
      out.add({prod}, k % 2 ? Rational(-c) : Rational(c));
    }
    acc = detail::sym_expand_last_slot(acc, true);
  }
  return out;
}

}  // namespace schroder
