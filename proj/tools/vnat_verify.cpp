#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vnat/checks.hpp"
#include "vnat/enumerate.hpp"

using namespace vnat;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw checks::ConfigError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of lattice, code and q-series identities around the moonshine module"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::pair<std::string, std::string>> overrides;
  auto add_override = [&](CLI::App* sub, const std::string& key, const std::string& help) {
    sub->add_option_function<std::string>(
        "--" + key, [&overrides, key](const std::string& v) { overrides.emplace_back(key, v); }, help);
  };

  std::vector<std::string> names;
  std::string out_path;
  bool no_runtime = false;
  auto* verify = app.add_subcommand("verify", "Run named checks (or 'all') and print a JSON report");
  verify->add_option("names", names, "Check names, or 'all'")->required();
  verify->add_option("--config", config_path, "key = value config file applied before flag overrides");
  verify->add_option("--out", out_path, "Write the JSON report to this file instead of stdout");
  verify->add_flag("--no-runtime", no_runtime, "Omit runtime fields from the report");
  add_override(verify, "prec", "q-series terms counted from q^-1 (default 12)");
  add_override(verify, "nmax", "Highest theta coefficient enumerated (default 2)");
  add_override(verify, "kmax", "Largest replicability index k (default 6)");
  add_override(verify, "rank", "Fock space rank (default 2)");
  add_override(verify, "degree", "Largest state degree in Fock sweeps (default 6)");
  add_override(verify, "window", "Mode window of generator fields (default 20)");
  add_override(verify, "trials", "Random samples for cocycle and scalar-action sweeps (default 1000)");
  add_override(verify, "seed", "Seed of the randomized sweeps (default 1)");
  add_override(verify, "threads", "Enumeration threads, 0 = all cores (default 1)");
  add_override(verify, "jobs", "Checks run concurrently (default 1)");
  verify->add_flag_callback("--budget-override", [&] { overrides.emplace_back("budget_override", "true"); },
                            "Allow enumerations beyond the point-count budget");

  auto* list = app.add_subcommand("list", "List the check catalogue");

  std::string expr;
  std::int64_t prec = 12;
  bool as_text = false;
  auto* series = app.add_subcommand("series", "Print a q-series");
  series->add_option("expr", expr,
                     "j, leech-character, involution-trace, twisted-character, delta, e4, or eta:m^r,m^r,...")
      ->required();
  series->add_option("--prec", prec, "Terms counted from the leading exponent (default 12)");
  series->add_flag("--text", as_text, "Print in the 'denom trunc' / 'k num/den' text format");

  std::string lattice_name;
  std::string norm_text;
  bool budget_override = false;
  unsigned threads = 1;
  auto* enumerate = app.add_subcommand("enumerate", "Count lattice vectors of a given norm");
  enumerate->add_option("lattice", lattice_name, "niemeier, leech, lambda0, e8, a1, z<n>, or a lattice file")
      ->required();
  enumerate->add_option("norm", norm_text, "Norm (a rational number)")->required();
  enumerate->add_flag("--budget-override", budget_override, "Allow enumerations beyond the point-count budget");
  enumerate->add_option("--threads", threads, "Enumeration threads, 0 = all cores");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      checks::CheckConfig cfg;
      if (!config_path.empty()) cfg = checks::parse_config(read_file(config_path));
      for (const auto& [key, value] : overrides) checks::set_config_value(cfg, key, value);
      checks::validate(cfg);
      const auto reports = checks::run(names, cfg);
      const std::string json = checks::to_json(reports, cfg, !no_runtime);
      if (out_path.empty()) {
        std::cout << json;
      } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
        out << json;
      }
      for (const auto& r : reports) {
        std::cerr << checks::to_string(r.status) << "  " << r.name << "\n";
      }
      return checks::all_passed(reports) ? 0 : 1;
    }
    if (*list) {
      for (const auto& c : checks::catalogue()) {
        std::cout << c.name << "\t" << checks::to_string(c.basis) << "\t" << c.claim << "\n";
      }
      return 0;
    }
    if (*series) {
      const auto s = checks::named_series(expr, prec);
      std::cout << (as_text ? qseries::to_text(s) : qseries::to_display(s) + "\n");
      return 0;
    }
    if (*enumerate) {
      const auto l = checks::named_lattice(lattice_name);
      lattice::EnumerationOptions opts;
      opts.budget_override = budget_override;
      opts.threads = threads;
      std::cout << lattice::count_vectors_of_norm(l, parse_rational(norm_text), opts) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
