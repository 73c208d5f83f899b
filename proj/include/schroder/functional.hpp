#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "schroder/errors.hpp"
#include "schroder/hopf.hpp"
#include "schroder/rational.hpp"
#include "schroder/words.hpp"

namespace schroder {

// A linear functional on the word Hopf algebra, given by a rule on basis bar
// monomials. Values are memoized; copies share the cache. The optional degree
// cap is bookkeeping carried by table-backed functionals so that combining
// functionals built over different caps fails loudly.
class Functional {
 public:
  using Rule = std::function<Rational(const BarMonomial&)>;

  Functional() : state_(std::make_shared<State>()) {
    state_->rule = [](const BarMonomial&) { return Rational(0); };
  }

  static Functional from_rule(Rule rule, int cap = -1) {
    Functional f;
    f.state_->rule = std::move(rule);
    f.cap_ = cap;
    return f;
  }

  static Functional counit_functional(int cap = -1) {
    return from_rule([](const BarMonomial& m) { return Rational(m.is_unit() ? 1 : 0); }, cap);
  }

  // Multiplicative extension of a rule on words.
  static Functional character(std::function<Rational(const Word&)> on_words, int cap = -1) {
    return from_rule(
        [fn = std::move(on_words)](const BarMonomial& m) {
          Rational acc(1);
          for (const auto& w : m.words) acc *= fn(w);
          return acc;
        },
        cap);
  }

  // Vanishes on the unit and on proper bar products.
  static Functional infinitesimal(std::function<Rational(const Word&)> on_words, int cap = -1) {
    return from_rule(
        [fn = std::move(on_words)](const BarMonomial& m) {
          if (m.bar_count() != 1) return Rational(0);
          return fn(m.words[0]);
        },
        cap);
  }

  Rational value(const BarMonomial& m) const {
    {
      std::lock_guard<std::mutex> lock(state_->mtx);
      auto it = state_->cache.find(m);
      if (it != state_->cache.end()) return it->second;
    }
    Rational v = state_->rule(m);
    std::lock_guard<std::mutex> lock(state_->mtx);
    return state_->cache.emplace(m, std::move(v)).first->second;
  }

  Rational value(const Word& w) const { return value(BarMonomial{{w}}); }

  Rational value(const TensorElement& x) const {
    if (x.rank() != 1) throw DomainError("functional evaluation expects rank 1");
    Rational acc(0);
    for (const auto& [key, c] : x.terms()) acc += c * value(key[0]);
    return acc;
  }

  int cap() const { return cap_; }

 private:
  struct State {
    Rule rule;
    std::map<BarMonomial, Rational> cache;
    std::mutex mtx;
  };
  std::shared_ptr<State> state_;
  int cap_ = -1;
};

namespace detail {

inline int merge_caps(int a, int b) {
  if (a < 0) return b;
  if (b < 0) return a;
  if (a != b) throw DomainError("degree cap mismatch between functionals");
  return a;
}

}  // namespace detail

inline Functional functional_sum(const Functional& f, const Functional& g) {
  return Functional::from_rule(
      [f, g](const BarMonomial& m) { return Rational(f.value(m) + g.value(m)); },
      detail::merge_caps(f.cap(), g.cap()));
}

inline Functional functional_scale(const Rational& c, const Functional& f) {
  return Functional::from_rule([c, f](const BarMonomial& m) { return Rational(c * f.value(m)); },
                               f.cap());
}

inline Functional functional_sub(const Functional& f, const Functional& g) {
  return functional_sum(f, functional_scale(Rational(-1), g));
}

// f*g = m (f (x) g) Delta.
inline Functional convolve(const Functional& f, const Functional& g) {
  return Functional::from_rule(
      [f, g](const BarMonomial& m) {
        Rational acc(0);
        detail::for_each_coproduct_pair(m, 0, [&](BarMonomial&& l, BarMonomial&& r) {
          acc += f.value(l) * g.value(r);
        });
        return acc;
      },
      detail::merge_caps(f.cap(), g.cap()));
}

// f<g and f>g, dual to the half coproducts; zero on the unit so that the
// conventions f<eps = f = eps>f hold degreewise.
inline Functional half_shuffle_left(const Functional& f, const Functional& g) {
  return Functional::from_rule(
      [f, g](const BarMonomial& m) {
        if (m.is_unit()) return Rational(0);
        Rational acc(0);
        detail::for_each_coproduct_pair(m, 1, [&](BarMonomial&& l, BarMonomial&& r) {
          acc += f.value(l) * g.value(r);
        });
        return acc;
      },
      detail::merge_caps(f.cap(), g.cap()));
}

inline Functional half_shuffle_right(const Functional& f, const Functional& g) {
  return Functional::from_rule(
      [f, g](const BarMonomial& m) {
        if (m.is_unit()) return Rational(0);
        Rational acc(0);
        detail::for_each_coproduct_pair(m, -1, [&](BarMonomial&& l, BarMonomial&& r) {
          acc += f.value(l) * g.value(r);
        });
        return acc;
      },
      detail::merge_caps(f.cap(), g.cap()));
}

namespace detail {

// Lazily grown sequence of functionals t_0, t_1 = next(t_0), ...
struct FunctionalSeries {
  std::vector<Functional> terms;
  std::function<Functional(const Functional&)> next;
  std::mutex mtx;

  Functional term(int k) {
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<int>(terms.size()) <= k) terms.push_back(next(terms.back()));
    return terms[k];
  }
};

inline void require_infinitesimal(const Functional& a, const char* who) {
  if (a.value(BarMonomial{}) != 0)
    throw DomainError(std::string(who) + " expects an infinitesimal character");
}

inline void require_character(const Functional& phi, const char* who) {
  if (phi.value(BarMonomial{}) != 1)
    throw DomainError(std::string(who) + " expects a unital character");
}

}  // namespace detail

// exp*(a) = sum_k a^{*k}/k!; terminates per grade since a kills the unit.
inline Functional conv_exp(const Functional& a) {
  detail::require_infinitesimal(a, "conv_exp");
  auto series = std::make_shared<detail::FunctionalSeries>();
  series->terms = {Functional::counit_functional()};
  series->next = [a](const Functional& prev) { return convolve(prev, a); };
  return Functional::from_rule(
      [series](const BarMonomial& m) {
        Rational acc(0);
        for (int k = 0; k <= m.degree(); ++k) {
          Rational t = series->term(k).value(m);
          t /= Rational(factorial(static_cast<unsigned>(k)));
          acc += t;
        }
        return acc;
      },
      a.cap());
}

// log*(Phi) = sum_k (-1)^{k-1}/k (Phi - eps)^{*k}.
inline Functional conv_log(const Functional& phi) {
  detail::require_character(phi, "conv_log");
  const Functional diff = functional_sub(phi, Functional::counit_functional());
  auto series = std::make_shared<detail::FunctionalSeries>();
  series->terms = {Functional::counit_functional()};
  series->next = [diff](const Functional& prev) { return convolve(prev, diff); };
  return Functional::from_rule(
      [series](const BarMonomial& m) {
        if (m.is_unit()) return Rational(0);
        Rational acc(0);
        for (int k = 1; k <= m.degree(); ++k) {
          Rational t = series->term(k).value(m);
          t /= Rational(k);
          if (k % 2 == 0) t = -t;
          acc += t;
        }
        return acc;
      },
      phi.cap());
}

// E_<(a) = sum_n a^{<n} with a^{<(n+1)} = a < a^{<n}.
inline Functional exp_left(const Functional& a) {
  detail::require_infinitesimal(a, "exp_left");
  auto series = std::make_shared<detail::FunctionalSeries>();
  series->terms = {Functional::counit_functional()};
  series->next = [a](const Functional& prev) { return half_shuffle_left(a, prev); };
  return Functional::from_rule(
      [series](const BarMonomial& m) {
        Rational acc(0);
        for (int k = 0; k <= m.degree(); ++k) acc += series->term(k).value(m);
        return acc;
      },
      a.cap());
}

// E_>(a) = sum_n a^{>n} with a^{>(n+1)} = a^{>n} > a.
inline Functional exp_right(const Functional& a) {
  detail::require_infinitesimal(a, "exp_right");
  auto series = std::make_shared<detail::FunctionalSeries>();
  series->terms = {Functional::counit_functional()};
  series->next = [a](const Functional& prev) { return half_shuffle_right(prev, a); };
  return Functional::from_rule(
      [series](const BarMonomial& m) {
        Rational acc(0);
        for (int k = 0; k <= m.degree(); ++k) acc += series->term(k).value(m);
        return acc;
      },
      a.cap());
}

// Phi^{*-1} = sum_k (-1)^k (Phi - eps)^{*k}.
inline Functional conv_inverse_geometric(const Functional& phi) {
  detail::require_character(phi, "conv_inverse");
  const Functional diff = functional_sub(phi, Functional::counit_functional());
  auto series = std::make_shared<detail::FunctionalSeries>();
  series->terms = {Functional::counit_functional()};
  series->next = [diff](const Functional& prev) { return convolve(prev, diff); };
  return Functional::from_rule(
      [series](const BarMonomial& m) {
        Rational acc(0);
        for (int k = 0; k <= m.degree(); ++k) {
          Rational t = series->term(k).value(m);
          if (k % 2) t = -t;
          acc += t;
        }
        return acc;
      },
      phi.cap());
}

// Phi o S through the cancellation-free antipode.
inline Functional compose_antipode(const Functional& phi) {
  detail::require_character(phi, "compose_antipode");
  return Functional::from_rule(
      [phi](const BarMonomial& m) { return phi.value(antipode_schroder(m)); }, phi.cap());
}

}  // namespace schroder
