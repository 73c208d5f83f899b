#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "schroder/errors.hpp"
#include "schroder/ncprob.hpp"
#include "schroder/words.hpp"

namespace schroder {

using Json = nlohmann::ordered_json;

// {"rank": r, "terms": [{"coeff": "p/q", "monomials": [[[1,2],[3]], ...]}]}
// with one monomials entry per tensor slot; terms appear in canonical key
// order because TensorElement stores them that way.
inline Json element_to_json(const TensorElement& x) {
  Json terms = Json::array();
  for (const auto& [key, c] : x.terms()) {
    Json slots = Json::array();
    for (const auto& m : key) {
      Json words = Json::array();
      for (const auto& w : m.words) words.push_back(w.letters);
      slots.push_back(std::move(words));
    }
    terms.push_back(Json{{"coeff", rational_to_string(c)}, {"monomials", std::move(slots)}});
  }
  return Json{{"rank", x.rank()}, {"terms", std::move(terms)}};
}

inline TensorElement element_from_json(const Json& j) {
  try {
    TensorElement out(j.at("rank").get<int>());
    for (const auto& term : j.at("terms")) {
      std::vector<BarMonomial> key;
      for (const auto& slot : term.at("monomials")) {
        BarMonomial m;
        for (const auto& word : slot) {
          Word w;
          for (const auto& l : word) w.letters.push_back(l.get<Letter>());
          validate_word(w);
          m.words.push_back(std::move(w));
        }
        key.push_back(std::move(m));
      }
      out.add(key, parse_rational(term.at("coeff").get<std::string>()));
    }
    return out;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad element JSON: ") + e.what(), 0);
  }
}

namespace detail {

inline Json table_values_to_json(const std::map<Word, Rational>& values) {
  Json out = Json::object();
  for (const auto& [w, v] : values) out[word_to_string(w)] = rational_to_string(v);
  return out;
}

inline std::map<Word, Rational> table_values_from_json(const Json& j) {
  std::map<Word, Rational> out;
  for (auto it = j.begin(); it != j.end(); ++it)
    out.emplace(parse_word(it.key()), parse_rational(it.value().get<std::string>()));
  return out;
}

}  // namespace detail

// {"alphabet": ["a1","a2"], "max_degree": N, "moments": {"1 2": "p/q", ...}};
// cumulant files carry the same layout plus a "kind" field.
inline Json moment_table_to_json(const MomentTable& t) {
  return Json{{"alphabet", t.alphabet},
              {"max_degree", t.max_degree},
              {"moments", detail::table_values_to_json(t.values)}};
}

inline Json cumulant_table_to_json(const CumulantTable& t) {
  return Json{{"alphabet", t.alphabet},
              {"max_degree", t.max_degree},
              {"kind", kind_to_string(t.kind)},
              {"moments", detail::table_values_to_json(t.values)}};
}

inline MomentTable moment_table_from_json(const Json& j) {
  try {
    MomentTable t;
    t.alphabet = j.at("alphabet").get<std::vector<std::string>>();
    t.max_degree = j.at("max_degree").get<int>();
    const auto& values = j.contains("moments") ? j.at("moments") : j.at("cumulants");
    t.values = detail::table_values_from_json(values);
    validate_moment_table(t);
    return t;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad moment table JSON: ") + e.what(), 0);
  }
}

inline CumulantTable cumulant_table_from_json(const Json& j) {
  try {
    CumulantTable t;
    t.alphabet = j.at("alphabet").get<std::vector<std::string>>();
    t.max_degree = j.at("max_degree").get<int>();
    t.kind = parse_kind(j.at("kind").get<std::string>());
    const auto& values = j.contains("moments") ? j.at("moments") : j.at("cumulants");
    t.values = detail::table_values_from_json(values);
    validate_cumulant_table(t);
    return t;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad cumulant table JSON: ") + e.what(), 0);
  }
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what(), 0);
  }
}

inline void save_json_file(const std::string& path, const Json& j, bool pretty) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << (pretty ? j.dump(2) : j.dump()) << "\n";
}

inline std::string dump_json(const Json& j, bool pretty) {
  return (pretty ? j.dump(2) : j.dump()) + "\n";
}

}  // namespace schroder
