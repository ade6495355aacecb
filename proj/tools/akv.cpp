// Command-line front end: run scripts, run the built-in verification suites,
// sweep the pairing identity over Morita ranks.
//
// Exit codes: 0 all verdicts pass, 1 failed checks, 2 usage/parse errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "akv/interpreter.hpp"

namespace {

int finish(const akv::script::Report& report, const std::string& json_path) {
  std::cout << report.summary();
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return 2;
    }
    out << report.to_json().dump(2) << "\n";
  }
  return report.all_pass() ? 0 : 1;
}

std::vector<akv::Rational> parse_genus_list(const std::string& csv) {
  std::vector<akv::Rational> out;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ','))
    if (!item.empty()) out.push_back(akv::parse_rational(item));
  if (out.empty()) throw akv::Error("empty genus list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and numerical checks for Hermitian bundle identities"};
  app.require_subcommand(1);

  // run
  std::string script_path, json_path;
  std::uint64_t seed = 0;
  bool fail_fast = false;
  CLI::App* run = app.add_subcommand("run", "execute a script file");
  run->add_option("script", script_path, "script file (.akv)")->required();
  run->add_option("--json", json_path, "write the JSON report here");
  run->add_option("--seed", seed, "seed mixed into seeded checks");
  run->add_flag("--fail-fast", fail_fast, "stop at the first failed entry");

  // selftest
  int seeds = 100, dims_max = 4;
  CLI::App* selftest = app.add_subcommand("selftest", "run the built-in suites");
  selftest->add_option("--seeds", seeds, "instances per isometry lemma")
      ->check(CLI::PositiveNumber);
  selftest->add_option("--dims-max", dims_max, "largest space dimension")
      ->check(CLI::PositiveNumber);

  // sweep-pairing
  int n_max = 8;
  std::string genus_csv = "0,1,2,3";
  CLI::App* sweep =
      app.add_subcommand("sweep-pairing", "pairing identity over Morita ranks");
  sweep->add_option("--n-max", n_max, "largest Morita rank n (rank(A) = n^2)")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--genus-list", genus_csv, "comma-separated genus values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (run->parsed()) {
      std::ifstream in(script_path);
      if (!in) {
        std::cerr << "error: cannot open " << script_path << "\n";
        return 2;
      }
      std::stringstream buffer;
      buffer << in.rdbuf();
      akv::script::Script parsed;
      try {
        parsed = akv::script::parse(buffer.str());
      } catch (const akv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      akv::script::RunOptions options;
      options.seed = seed;
      options.fail_fast = fail_fast;
      return finish(akv::script::execute(parsed, options), json_path);
    }
    if (selftest->parsed())
      return finish(akv::script::selftest(seeds, dims_max), "");
    if (sweep->parsed())
      return finish(akv::script::sweep_pairing(n_max, parse_genus_list(genus_csv)),
                    "");
  } catch (const akv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
