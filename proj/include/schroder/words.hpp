#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "schroder/errors.hpp"
#include "schroder/rational.hpp"

namespace schroder {

using Letter = int;  // opaque positive ids; operations restrict by position

struct Word {
  std::vector<Letter> letters;

  Word() = default;
  Word(std::initializer_list<Letter> ls) : letters(ls) {}
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  int size() const { return static_cast<int>(letters.size()); }
  bool operator==(const Word&) const = default;
};

// Graded order: by length, then by letters.
inline bool operator<(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters < b.letters;
}

inline void validate_word(const Word& w) {
  if (w.size() == 0) throw DomainError("empty word");
  for (Letter l : w.letters)
    if (l < 1) throw DomainError("letters are positive integers");
}

inline std::string word_to_string(const Word& w) {
  std::string s;
  for (int i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w.letters[i]);
  }
  return s;
}

// Space-separated positive integers, e.g. "1 2 1".
inline Word parse_word(const std::string& text) {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) break;
    std::size_t used = 0;
    int value;
    try {
      value = std::stoi(text.substr(pos), &used);
    } catch (const std::exception&) {
      throw ParseError("bad word syntax", pos);
    }
    if (value < 1) throw ParseError("letters are positive integers", pos);
    w.letters.push_back(value);
    pos += used;
    if (pos < text.size() && text[pos] != ' ')
      throw ParseError("bad word syntax", pos);
  }
  if (w.size() == 0) throw ParseError("empty word", 0);
  return w;
}

// Bar monomial w_1 | w_2 | ... | w_m; the empty one is the unit.
struct BarMonomial {
  std::vector<Word> words;

  BarMonomial() = default;
  BarMonomial(std::initializer_list<Word> ws) : words(ws) {}
  explicit BarMonomial(Word w) : words{std::move(w)} {}
  explicit BarMonomial(std::vector<Word> ws) : words(std::move(ws)) {}

  bool is_unit() const { return words.empty(); }
  int bar_count() const { return static_cast<int>(words.size()); }
  int degree() const {
    int d = 0;
    for (const auto& w : words) d += w.size();
    return d;
  }
  bool operator==(const BarMonomial&) const = default;
};

inline bool operator<(const BarMonomial& a, const BarMonomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.words.size() != b.words.size()) return a.words.size() < b.words.size();
  for (std::size_t i = 0; i < a.words.size(); ++i) {
    if (a.words[i] < b.words[i]) return true;
    if (b.words[i] < a.words[i]) return false;
  }
  return false;
}

inline std::string bar_monomial_to_string(const BarMonomial& m) {
  if (m.is_unit()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.words.size(); ++i) {
    if (i) s += '|';
    s += word_to_string(m.words[i]);
  }
  return s;
}

inline BarMonomial bar_concat(const BarMonomial& a, const BarMonomial& b) {
  BarMonomial r = a;
  r.words.insert(r.words.end(), b.words.begin(), b.words.end());
  return r;
}

// Commutative counterpart: an unordered multiset of words, kept sorted.
struct CommMonomial {
  std::vector<Word> words;

  CommMonomial() = default;
  explicit CommMonomial(std::vector<Word> ws) : words(std::move(ws)) {
    std::sort(words.begin(), words.end());
  }
  static CommMonomial from_bar(const BarMonomial& m) { return CommMonomial(m.words); }

  bool is_unit() const { return words.empty(); }
  int degree() const {
    int d = 0;
    for (const auto& w : words) d += w.size();
    return d;
  }
  bool operator==(const CommMonomial&) const = default;
};

inline bool operator<(const CommMonomial& a, const CommMonomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.words.size() != b.words.size()) return a.words.size() < b.words.size();
  return a.words < b.words;
}

inline CommMonomial comm_product(const CommMonomial& a, const CommMonomial& b) {
  std::vector<Word> ws = a.words;
  ws.insert(ws.end(), b.words.begin(), b.words.end());
  return CommMonomial(std::move(ws));
}

// Linear combination of rank-r tuples of bar monomials over the rationals.
// Zero coefficients are dropped eagerly, so equality is map equality.
class TensorElement {
 public:
  explicit TensorElement(int rank = 1) : rank_(rank) {
    if (rank < 1) throw DomainError("tensor rank must be >= 1");
  }

  static TensorElement unit(int rank = 1) {
    TensorElement e(rank);
    e.add(std::vector<BarMonomial>(rank), 1);
    return e;
  }

  static TensorElement from_word(const Word& w) {
    validate_word(w);
    TensorElement e(1);
    e.add({BarMonomial(w)}, 1);
    return e;
  }

  static TensorElement from_monomial(const BarMonomial& m) {
    TensorElement e(1);
    e.add({m}, 1);
    return e;
  }

  int rank() const { return rank_; }
  const std::map<std::vector<BarMonomial>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const std::vector<BarMonomial>& key, const Rational& coeff) {
    if (static_cast<int>(key.size()) != rank_)
      throw DomainError("tensor term has wrong rank");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const TensorElement& other, const Rational& scale) {
    if (other.rank_ != rank_) throw DomainError("tensor rank mismatch");
    for (const auto& [key, c] : other.terms_) add(key, Rational(c * scale));
  }

  TensorElement& operator+=(const TensorElement& o) {
    add_scaled(o, 1);
    return *this;
  }
  TensorElement& operator-=(const TensorElement& o) {
    add_scaled(o, -1);
    return *this;
  }
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const Rational& c, const TensorElement& e) {
    TensorElement r(e.rank_);
    r.add_scaled(e, c);
    return r;
  }

  Rational coefficient(const std::vector<BarMonomial>& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool operator==(const TensorElement& o) const {
    return rank_ == o.rank_ && terms_ == o.terms_;
  }

 private:
  int rank_;
  std::map<std::vector<BarMonomial>, Rational> terms_;
};

inline std::string tensor_to_string(const TensorElement& e) {
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto& [key, c] : e.terms()) {
    if (!s.empty()) s += " + ";
    s += rational_to_string(c) + "*";
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) s += " (x) ";
      s += bar_monomial_to_string(key[i]);
    }
  }
  return s;
}

// Same shape over commutative monomials, for the symmetric-algebra variant.
class CommElement {
 public:
  explicit CommElement(int rank = 1) : rank_(rank) {
    if (rank < 1) throw DomainError("tensor rank must be >= 1");
  }

  int rank() const { return rank_; }
  const std::map<std::vector<CommMonomial>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const std::vector<CommMonomial>& key, const Rational& coeff) {
    if (static_cast<int>(key.size()) != rank_)
      throw DomainError("tensor term has wrong rank");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool operator==(const CommElement& o) const {
    return rank_ == o.rank_ && terms_ == o.terms_;
  }

 private:
  int rank_;
  std::map<std::vector<CommMonomial>, Rational> terms_;
};

// Positions are 1-based. Restriction keeps the letters at the positions in I
// (in increasing position order); I must be a subset of [len(w)].
inline Word restrict_word(const Word& w, const std::vector<int>& positions) {
  Word r;
  int prev = 0;
  for (int p : positions) {
    if (p < 1 || p > w.size()) throw DomainError("restriction position out of range");
    if (p <= prev) throw DomainError("restriction positions must be strictly increasing");
    prev = p;
    r.letters.push_back(w.letters[p - 1]);
  }
  return r;
}

// Maximal runs of consecutive integers in J \ I (consecutive in the ambient
// integers, not relative to J), ascending. I must be contained in J.
inline std::vector<std::vector<int>> connected_components(const std::vector<int>& I,
                                                          const std::vector<int>& J) {
  for (int x : I)
    if (std::find(J.begin(), J.end(), x) == J.end())
      throw DomainError("I must be a subset of J");
  std::vector<int> diff;
  for (int x : J)
    if (std::find(I.begin(), I.end(), x) == I.end()) diff.push_back(x);
  std::sort(diff.begin(), diff.end());
  std::vector<std::vector<int>> comps;
  for (int x : diff) {
    if (comps.empty() || comps.back().back() + 1 != x) comps.emplace_back();
    comps.back().push_back(x);
  }
  return comps;
}

// w^(I,J) = w_{K_1} | ... | w_{K_r} over the components of J \ I.
inline BarMonomial split_word(const Word& w, const std::vector<int>& I,
                              const std::vector<int>& J) {
  BarMonomial m;
  for (const auto& comp : connected_components(I, J)) m.words.push_back(restrict_word(w, comp));
  return m;
}

}  // namespace schroder
