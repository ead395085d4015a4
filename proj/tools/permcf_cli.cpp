#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "permcf/bijections.hpp"
#include "permcf/cfrac.hpp"
#include "permcf/harness.hpp"
#include "permcf/identity.hpp"
#include "permcf/mpoly.hpp"

using namespace permcf;

namespace {

int run_verify(const std::string& ids_csv, int max_n, const std::string& json_path,
               bool timings, bool sequential) {
  VerifyConfig cfg;
  if (!ids_csv.empty()) {
    std::istringstream in(ids_csv);
    std::string id;
    while (std::getline(in, id, ',')) {
      if (!id.empty()) cfg.ids.push_back(id);
    }
  }
  cfg.max_n = max_n;
  cfg.timings = timings;
  cfg.parallel = !sequential;
  Report report = verify(cfg);
  std::cout << report_text(report);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot open " << json_path << "\n";
      return 2;
    }
    out << report_json(report);
  }
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for permutation statistics and "
               "continued fractions"};
  app.require_subcommand(1);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run identity checks");
  std::string ids, json_path;
  int max_n = -1;
  bool timings = false, sequential = false;
  verify_cmd->add_option("--ids", ids, "comma-separated case ids (default: all)");
  verify_cmd->add_option("--max-n", max_n, "cap the per-case sizes");
  verify_cmd->add_option("--json", json_path, "write the JSON report here");
  verify_cmd->add_flag("--timings", timings, "emit wall-clock runtimes in the report");
  verify_cmd->add_flag("--sequential", sequential, "run cases one at a time");

  auto* list_cmd = app.add_subcommand("list", "list the registry case ids");

  // table
  auto* table_cmd = app.add_subcommand("table", "distribution tables over a class");
  TableOptions topt;
  std::string stats_csv = "des";
  table_cmd->add_option("--class", topt.cls, "S, D, B, S(231), D(321), ...");
  table_cmd->add_option("--stats", stats_csv, "comma-separated statistic names");
  table_cmd->add_option("--n", topt.n, "largest size");
  table_cmd->add_option("--format", topt.format, "csv or json");

  // map
  auto* map_cmd = app.add_subcommand("map", "apply a bijection to one permutation");
  std::string bijection = "phi", input;
  map_cmd->add_option("--bijection", bijection,
                      "phi|psi|psi_fv|phi_fv|phi_fz|psi_yzl|phi_fz_var|phi_tilde|psi_tilde");
  map_cmd->add_option("--input", input, "one-line permutation, e.g. \"4 1 2 7 9 6 5 8 3\"")
      ->required();

  // cf
  auto* cf_cmd = app.add_subcommand("cf", "expand a named continued fraction");
  std::string kind = "J", spec_name;
  int order = 6;
  cf_cmd->add_option("--kind", kind, "J or S (must match the spec)");
  cf_cmd->add_option("--spec", spec_name, "named coefficient spec")->required();
  cf_cmd->add_option("--order", order, "truncation order");

  // gamma
  auto* gamma_cmd = app.add_subcommand("gamma", "expand a palindromic polynomial in the gamma basis");
  std::string poly_text;
  int center = -1;
  gamma_cmd->add_option("--poly", poly_text, "polynomial in t, e.g. \"1+4*t+t^2\"")->required();
  gamma_cmd->add_option("--m", center, "center degree")->required();

  // stat
  auto* stat_cmd = app.add_subcommand("stat", "evaluate a named statistic");
  std::string stat_name, stat_input;
  stat_cmd->add_option("--name", stat_name, "statistic name")->required();
  stat_cmd->add_option("--input", stat_input, "one-line permutation")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify_cmd) return run_verify(ids, max_n, json_path, timings, sequential);
    if (*list_cmd) {
      for (const auto& c : theorem_registry())
        std::cout << c.id << "\t" << c.method << "\tn<=" << c.n_default << "\t"
                  << c.description << "\n";
      return 0;
    }
    if (*table_cmd) {
      std::istringstream in(stats_csv);
      std::string s;
      while (std::getline(in, s, ','))
        if (!s.empty()) topt.stats.push_back(s);
      std::cout << make_table(topt);
      return 0;
    }
    if (*map_cmd) {
      Permutation p = Permutation::parse(input);
      std::cout << apply_bijection(bijection, p).str() << "\n";
      return 0;
    }
    if (*cf_cmd) {
      CFSpec spec = named_cf_spec(spec_name);
      bool is_j = spec.kind == CFSpec::Kind::J;
      if ((kind == "J") != is_j) {
        std::cerr << "spec '" << spec_name << "' is " << (is_j ? "J" : "S") << "-type\n";
        return 2;
      }
      SeriesZ s = cf_expand(spec, order);
      for (int k = 0; k <= order; ++k)
        std::cout << "z^" << k << ": " << s[k].str() << "\n";
      return 0;
    }
    if (*gamma_cmd) {
      MPoly p = MPoly::parse(poly_text);
      GammaExpansion g = gamma_expand(p, center);
      if (!g.ok) {
        std::cout << "not gamma-expandable; residual: " << g.residual.str() << "\n";
        return 1;
      }
      for (size_t k = 0; k < g.gamma.size(); ++k) {
        if (k) std::cout << ' ';
        std::cout << g.gamma[k];
      }
      std::cout << "\n";
      return 0;
    }
    if (*stat_cmd) {
      Permutation p = Permutation::parse(stat_input);
      std::cout << stat_by_name(stat_name, p) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
