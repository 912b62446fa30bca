// Command-line front end: runs law suites on structure files, generates
// fixtures, and runs the whole verification batch.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "daggerlab/fixtures.hpp"
#include "daggerlab/serialize.hpp"
#include "daggerlab/strength.hpp"
#include "daggerlab/suite.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitLawFailure = 1;
constexpr int kExitInputError = 2;

double default_eps() {
  if (const char* env = std::getenv("DAGGERLAB_EPS")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw daggerlab::BadParams("DAGGERLAB_EPS is not a number");
    }
  }
  return 1e-9;
}

std::map<std::string, std::string> parse_params(
    const std::vector<std::string>& tokens) {
  std::map<std::string, std::string> out;
  for (const auto& tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) {
      throw daggerlab::BadParams("expected key=value, got \"" + tok + "\"");
    }
    out[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return out;
}

std::string take(std::map<std::string, std::string>& params,
                 const std::string& key,
                 std::optional<std::string> fallback = std::nullopt) {
  auto it = params.find(key);
  if (it == params.end()) {
    if (fallback) return *fallback;
    throw daggerlab::BadParams("missing parameter \"" + key + "\"");
  }
  std::string v = it->second;
  params.erase(it);
  return v;
}

int take_int(std::map<std::string, std::string>& params,
             const std::string& key) {
  const std::string v = take(params, key);
  try {
    return std::stoi(v);
  } catch (const std::exception&) {
    throw daggerlab::BadParams("parameter \"" + key + "\" is not an integer");
  }
}

daggerlab::Backend backend_param(std::map<std::string, std::string>& params) {
  const std::string b = take(params, "backend", std::string("fhilb"));
  if (b == "rel") return daggerlab::Backend::Rel;
  if (b == "fhilb") return daggerlab::Backend::FHilb;
  throw daggerlab::BadParams("unknown backend \"" + b + "\"");
}

daggerlab::FiniteGroupoid groupoid_by_name(const std::string& name) {
  for (const auto& [n, g] : daggerlab::battery_groupoids()) {
    if (n == name) return g;
  }
  if (name.size() > 1 && name[0] == 'z') {
    const int k = std::stoi(name.substr(1));
    return daggerlab::group_groupoid(daggerlab::cyclic_group(k));
  }
  throw daggerlab::BadParams("unknown groupoid \"" + name + "\"");
}

int emit(const daggerlab::SuiteReport& report) {
  std::cout << daggerlab::suite_report_to_json(report).dump(2) << "\n";
  std::cerr << daggerlab::suite_report_summary(report);
  return report.overall() ? kExitPass : kExitLawFailure;
}

int cmd_check(const std::string& path, double eps, std::uint64_t seed,
              const std::string& suite) {
  const daggerlab::Tolerance tol{eps};
  const daggerlab::json j = daggerlab::load_json_file(path);
  daggerlab::SuiteReport report;
  switch (daggerlab::kind_of(j)) {
    case daggerlab::StructureKind::Monoid:
      report = daggerlab::run_monoid_suite(daggerlab::monoid_from_json(j),
                                           tol, path, suite);
      break;
    case daggerlab::StructureKind::Groupoid:
      report = daggerlab::run_groupoid_suite(
          daggerlab::groupoid_from_json(j), tol, path);
      break;
    case daggerlab::StructureKind::EmAlgebra:
      report = daggerlab::run_em_suite(
          daggerlab::em_algebra_from_json(j, tol), tol, path);
      break;
    case daggerlab::StructureKind::KleisliMorphism:
      report = daggerlab::run_kleisli_suite(
          daggerlab::kleisli_from_json(j, tol), tol, path);
      break;
  }
  report.seed = seed;
  return emit(report);
}

int cmd_generate(const std::vector<std::string>& tokens, std::uint64_t seed,
                 const std::string& out_path) {
  if (tokens.empty()) {
    throw daggerlab::BadParams("generate needs a kind");
  }
  std::string kind = tokens.front();
  std::vector<std::string> rest(tokens.begin() + 1, tokens.end());
  if (kind.find('=') != std::string::npos) {
    // compact form: generate group=s3 backend=rel
    rest.insert(rest.begin(), kind);
    kind = kind.substr(0, kind.find('='));
  }
  auto params = parse_params(rest);
  daggerlab::Rng rng(seed);
  daggerlab::json j;

  if (kind == "group") {
    const std::string name = take(params, "group");
    const daggerlab::Backend b = backend_param(params);
    const daggerlab::FiniteGroupoid g = groupoid_by_name(name);
    j = daggerlab::monoid_to_json(b == daggerlab::Backend::Rel
                                      ? daggerlab::groupoid_to_frobenius_rel(g)
                                      : daggerlab::groupoid_to_frobenius_fhilb(
                                            g));
  } else if (kind == "groupoid") {
    j = daggerlab::groupoid_to_json(groupoid_by_name(take(params, "name")));
  } else if (kind == "discrete") {
    j = daggerlab::groupoid_to_json(
        daggerlab::discrete_groupoid(take_int(params, "k")));
  } else if (kind == "pants") {
    j = daggerlab::monoid_to_json(
        daggerlab::pants_monoid(take_int(params, "n")));
  } else if (kind == "pvm") {
    const int m = take_int(params, "m");
    const int k = take_int(params, "k");
    j = daggerlab::em_algebra_to_json(daggerlab::pvm_algebra(rng, m, k));
  } else if (kind == "kleisli") {
    const std::string name = take(params, "group", std::string("z2"));
    const daggerlab::Backend b = backend_param(params);
    const int dom = take_int(params, "dom");
    const int cod = take_int(params, "cod");
    const daggerlab::FiniteGroupoid g = groupoid_by_name(name);
    const daggerlab::TensorMonad t(
        b == daggerlab::Backend::Rel
            ? daggerlab::groupoid_to_frobenius_rel(g)
            : daggerlab::groupoid_to_frobenius_fhilb(g));
    j = daggerlab::kleisli_to_json(
        daggerlab::random_kleisli(rng, t, dom, cod));
  } else {
    throw daggerlab::BadParams("unknown generate kind \"" + kind + "\"");
  }
  if (!params.empty()) {
    throw daggerlab::BadParams("unused parameter \"" +
                               params.begin()->first + "\"");
  }

  if (out_path.empty() || out_path == "-") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) {
      throw daggerlab::BadParams("cannot open output file " + out_path);
    }
    out << j.dump(2) << "\n";
    std::cerr << "wrote " << out_path << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"law checker for dagger Frobenius structures"};
  app.require_subcommand(1);

  std::string check_path;
  double eps = 1e-9;
  std::uint64_t seed = 20260801;
  std::string suite = "frobenius";
  auto* check = app.add_subcommand("check", "run a law suite on a file");
  check->add_option("file", check_path, "structure file")->required();
  check->add_option("--eps", eps, "FHilb tolerance");
  check->add_option("--seed", seed, "seed for randomized checks");
  check->add_option("--suite", suite, "monoid suite: frobenius|closure|all");

  std::vector<std::string> gen_tokens;
  std::string out_path;
  auto* generate =
      app.add_subcommand("generate", "write a fixture structure file");
  generate->add_option("kind", gen_tokens,
                       "kind and key=value parameters: group, groupoid, "
                       "discrete, pants, pvm, kleisli");
  generate->add_option("--seed", seed, "generator seed");
  generate->add_option("--out", out_path, "output path (- for stdout)");

  auto* paper =
      app.add_subcommand("paper-suite", "run the full verification batch");
  paper->add_option("--eps", eps, "FHilb tolerance");
  paper->add_option("--seed", seed, "seed for randomized checks");

  CLI11_PARSE(app, argc, argv);

  try {
    const bool eps_given =
        check->count("--eps") > 0 || paper->count("--eps") > 0;
    if (!eps_given) eps = default_eps();
    if (check->parsed()) return cmd_check(check_path, eps, seed, suite);
    if (generate->parsed()) return cmd_generate(gen_tokens, seed, out_path);
    daggerlab::SuiteReport report =
        daggerlab::run_paper_suite(daggerlab::Tolerance{eps}, seed);
    return emit(report);
  } catch (const daggerlab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const daggerlab::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const daggerlab::BadParams& e) {
    std::cerr << "bad parameters: " << e.what() << "\n";
    return kExitInputError;
  } catch (const daggerlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
