#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "schroder/json_io.hpp"
#include "schroder/ncprob.hpp"
#include "schroder/verify.hpp"

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

void print_json(const schroder::Json& j, bool pretty) {
  std::cout << schroder::dump_json(j, pretty);
}

int run_trees_enum(int n, int k, bool prime, bool boolean, bool with_ncp, bool murua) {
  const auto trees =
      k >= 0 ? schroder::enum_schroder_by_k(n, k) : schroder::enum_schroder(n);
  for (const auto& t : trees) {
    if (prime && !schroder::is_prime(t)) continue;
    if (boolean && !schroder::is_boolean(t)) continue;
    std::cout << schroder::serialize_tree(t);
    if (with_ncp)
      std::cout << "  " << schroder::partition_to_string(schroder::tree_to_ncp(t));
    if (murua)
      std::cout << "  " << schroder::rational_to_string(schroder::murua_coefficient(t));
    std::cout << '\n';
  }
  return 0;
}

int run_trees_count(int n) {
  long total = 0;
  for (int k = 1; k <= n; ++k) {
    const long c = static_cast<long>(schroder::enum_schroder_by_k(n, k).size());
    total += c;
    std::cout << "k=" << k << ' ' << c << '\n';
  }
  if (n == 0) total = 1;
  std::cout << "total " << total << '\n';
  return 0;
}

int run_verify(const schroder::verify::Options& opts, bool pretty) {
  const auto results = schroder::verify::run(opts);
  print_json(schroder::verify::report_to_json(results, opts), pretty);
  for (const auto& r : results)
    if (!r.passed) return kExitVerifyFailure;
  return 0;
}

schroder::MomentTable load_moments(const std::string& path) {
  return schroder::moment_table_from_json(schroder::load_json_file(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schroeder-tree Hopf algebra and cumulant calculus"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  auto* trees = app.add_subcommand("trees", "enumerate and count Schroeder trees");
  trees->require_subcommand(1);
  trees->fallthrough();
  int tree_n = 0;
  int tree_k = -1;
  bool tree_prime = false;
  bool tree_boolean = false;
  bool tree_with_ncp = false;
  bool tree_murua = false;
  auto* tree_enum = trees->add_subcommand("enum", "list trees of degree n");
  tree_enum->fallthrough();
  tree_enum->add_option("--n", tree_n, "tree degree")
      ->required()
      ->check(CLI::NonNegativeNumber);
  tree_enum->add_option("--k", tree_k, "restrict to k internal vertices")
      ->check(CLI::NonNegativeNumber);
  auto* prime_flag = tree_enum->add_flag("--prime", tree_prime, "prime trees only");
  tree_enum->add_flag("--boolean", tree_boolean, "Boolean trees only")
      ->excludes(prime_flag);
  tree_enum->add_flag("--with-ncp", tree_with_ncp, "append the partition pi(t)");
  tree_enum->add_flag("--murua", tree_murua, "append the Murua coefficient");
  auto* tree_count = trees->add_subcommand("count", "count trees of degree n by k");
  tree_count->fallthrough();
  tree_count->add_option("--n", tree_n, "tree degree")
      ->required()
      ->check(CLI::NonNegativeNumber);

  auto* hopf = app.add_subcommand("hopf", "Hopf algebra operations on words");
  hopf->require_subcommand(1);
  hopf->fallthrough();
  std::string hopf_word;
  std::string hopf_method = "schroder";
  bool hopf_reduced = false;
  int hopf_iterate = 2;
  auto* hopf_antipode = hopf->add_subcommand("antipode", "antipode of a word");
  hopf_antipode->fallthrough();
  hopf_antipode->add_option("--word", hopf_word, "space-separated letter indices")
      ->required();
  hopf_antipode->add_option("--method", hopf_method,
                            "schroder|takeuchi|bogoliubov|conv-identity");
  auto* hopf_coproduct = hopf->add_subcommand("coproduct", "coproduct of a word");
  hopf_coproduct->fallthrough();
  hopf_coproduct->add_option("--word", hopf_word, "space-separated letter indices")
      ->required();
  hopf_coproduct->add_flag("--reduced", hopf_reduced, "drop unit-slot terms");
  hopf_coproduct->add_option("--iterate", hopf_iterate, "number of output slots")
      ->check(CLI::PositiveNumber);

  auto* prob = app.add_subcommand("prob", "cumulant and moment transforms");
  prob->require_subcommand(1);
  prob->fallthrough();
  std::string prob_kind;
  std::string prob_word;
  std::string prob_method;
  std::string moments_path;
  std::string cumulants_path;
  auto* prob_cumulants = prob->add_subcommand("cumulants", "cumulants from moments");
  prob_cumulants->fallthrough();
  prob_cumulants->add_option("--kind", prob_kind, "free|boolean|monotone")->required();
  prob_cumulants->add_option("--moments", moments_path, "moment table JSON file")
      ->required();
  prob_cumulants->add_option("--method", prob_method, "extraction method");
  auto* prob_moments = prob->add_subcommand("moments", "moments from cumulants");
  prob_moments->fallthrough();
  prob_moments->add_option("--kind", prob_kind, "free|boolean|monotone")->required();
  prob_moments->add_option("--cumulants", cumulants_path, "cumulant table JSON file")
      ->required();
  auto* prob_wick = prob->add_subcommand("wick", "Wick polynomial of a word");
  prob_wick->fallthrough();
  prob_wick->add_option("--word", prob_word, "space-separated letter indices")
      ->required();
  prob_wick->add_option("--moments", moments_path, "moment table JSON file")
      ->required();
  prob_wick->add_option("--method", prob_method, "coproduct|interval|schroder");
  auto* prob_inverse = prob->add_subcommand("inverse", "convolution inverse values");
  prob_inverse->fallthrough();
  prob_inverse->add_option("--moments", moments_path, "moment table JSON file")
      ->required();
  prob_inverse->add_option("--method", prob_method,
                           "antipode|geometric|moebius|intervals");

  auto* verify = app.add_subcommand("verify", "run the cross-verification suite");
  verify->fallthrough();
  schroder::verify::Options vopts;
  verify->add_option("--degree", vopts.degree, "maximal word degree");
  verify->add_option("--seed", vopts.seed, "random table seed");
  verify->add_option("--tables", vopts.tables, "number of random tables")
      ->check(CLI::PositiveNumber);
  verify->add_option("--jobs", vopts.jobs, "parallel worker count")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (tree_enum->parsed())
      return run_trees_enum(tree_n, tree_k, tree_prime, tree_boolean, tree_with_ncp,
                            tree_murua);
    if (tree_count->parsed()) return run_trees_count(tree_n);
    if (hopf_antipode->parsed()) {
      const auto x = schroder::TensorElement::from_word(schroder::parse_word(hopf_word));
      const auto s = schroder::antipode(x, schroder::parse_antipode_method(hopf_method));
      print_json(schroder::element_to_json(s), pretty);
      return 0;
    }
    if (hopf_coproduct->parsed()) {
      const auto x = schroder::TensorElement::from_word(schroder::parse_word(hopf_word));
      const auto y = hopf_reduced
                         ? schroder::iterated_reduced_coproduct(x, hopf_iterate)
                         : schroder::iterated_coproduct(x, hopf_iterate);
      print_json(schroder::element_to_json(y), pretty);
      return 0;
    }
    if (prob_cumulants->parsed()) {
      const auto kind = schroder::parse_kind(prob_kind);
      const auto table = load_moments(moments_path);
      const auto out = prob_method.empty()
                           ? schroder::cumulants_from_moments(kind, table)
                           : schroder::cumulants_from_moments(kind, table, prob_method);
      print_json(schroder::cumulant_table_to_json(out), pretty);
      return 0;
    }
    if (prob_moments->parsed()) {
      const auto kind = schroder::parse_kind(prob_kind);
      const auto table =
          schroder::cumulant_table_from_json(schroder::load_json_file(cumulants_path));
      print_json(schroder::moment_table_to_json(
                     schroder::moments_from_cumulants(kind, table)),
                 pretty);
      return 0;
    }
    if (prob_wick->parsed()) {
      const auto table = load_moments(moments_path);
      const auto w = schroder::parse_word(prob_word);
      const auto method =
          prob_method.empty() ? std::string(schroder::kDefaultWickMethod) : prob_method;
      print_json(schroder::element_to_json(schroder::wick(w, table, method)), pretty);
      return 0;
    }
    if (prob_inverse->parsed()) {
      const auto table = load_moments(moments_path);
      const auto method = prob_method.empty()
                              ? std::string(schroder::kDefaultInverseMethod)
                              : prob_method;
      print_json(schroder::moment_table_to_json(schroder::conv_inverse(table, method)),
                 pretty);
      return 0;
    }
    if (verify->parsed()) return run_verify(vopts, pretty);
  } catch (const schroder::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const schroder::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const schroder::MissingMomentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const schroder::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
