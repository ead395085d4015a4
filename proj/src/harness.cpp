#include "permcf/harness.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "permcf/identity.hpp"
#include "permcf/statistics.hpp"

namespace permcf {

std::vector<std::string> registry_ids() {
  std::vector<std::string> out;
  for (const auto& c : theorem_registry()) out.push_back(c.id);
  return out;
}

namespace {

CaseResult run_case(const TheoremCase& c, const VerifyConfig& cfg) {
  CaseResult res;
  res.id = c.id;
  int n = (cfg.max_n < 0) ? c.n_default : std::min(c.n_default, cfg.max_n);
  res.n = n;
  if (n < c.n_min) {
    res.status = "skip";
    res.note = "requested size below the smallest supported (" +
               std::to_string(c.n_min) + ")";
    return res;
  }
  auto start = std::chrono::steady_clock::now();
  try {
    CaseOutcome out = c.run(n);
    res.status = out.pass ? "pass" : "fail";
    res.witness = out.witness;
    res.note = out.note;
  } catch (const ResourceError& e) {
    res.status = "skip";
    res.note = e.what();
  } catch (const std::exception& e) {
    res.status = "error";
    res.witness = e.what();
  }
  auto stop = std::chrono::steady_clock::now();
  res.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return res;
}

}  // namespace

Report verify(const VerifyConfig& config) {
  const auto& registry = theorem_registry();
  std::vector<const TheoremCase*> selected;
  if (config.ids.empty()) {
    for (const auto& c : registry) selected.push_back(&c);
  } else {
    for (const auto& id : config.ids) {
      const TheoremCase* found = nullptr;
      for (const auto& c : registry)
        if (c.id == id) found = &c;
      if (!found) {
        std::ostringstream err;
        err << "unknown case id '" << id << "'; valid ids:";
        for (const auto& c : registry) err << ' ' << c.id;
        throw std::invalid_argument(err.str());
      }
      selected.push_back(found);
    }
  }

  Report report;
  report.version = kToolVersion;
  report.config = config;
  report.cases.resize(selected.size());

  if (config.parallel && selected.size() > 1) {
    // cases are pure; merge order is the registry order, so the report is
    // deterministic regardless of scheduling
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min<size_t>(workers, selected.size()); ++w) {
      pool.emplace_back([&]() {
        while (true) {
          size_t k = next.fetch_add(1);
          if (k >= selected.size()) return;
          report.cases[k] = run_case(*selected[k], config);
        }
      });
    }
    for (auto& t : pool) t.join();
  } else {
    for (size_t k = 0; k < selected.size(); ++k)
      report.cases[k] = run_case(*selected[k], config);
  }

  for (const auto& r : report.cases)
    if (r.status == "fail" || r.status == "error") report.pass = false;
  return report;
}

Report reproduce_examples() {
  VerifyConfig cfg;
  cfg.ids = {"examples", "fig-3"};
  return verify(cfg);
}

std::string report_json(const Report& report) {
  nlohmann::ordered_json j;
  j["version"] = report.version;
  nlohmann::ordered_json cfg;
  cfg["ids"] = report.config.ids;
  cfg["max_n"] = report.config.max_n;
  cfg["timings"] = report.config.timings;
  cfg["caps"] = {{"s_max", global_caps().s_max}, {"b_max", global_caps().b_max}};
  j["config"] = cfg;
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();
  for (const auto& r : report.cases) {
    nlohmann::ordered_json c;
    c["id"] = r.id;
    c["status"] = r.status;
    c["n"] = r.n;
    c["runtime_ms"] = report.config.timings ? r.runtime_ms : 0;
    if (!r.witness.empty()) c["witness"] = r.witness;
    if (!r.note.empty()) c["note"] = r.note;
    cases.push_back(c);
  }
  j["cases"] = cases;
  j["pass"] = report.pass;
  return j.dump(2) + "\n";
}

std::string report_text(const Report& report) {
  std::ostringstream out;
  for (const auto& r : report.cases) {
    out << (r.status == "pass"   ? "[PASS] "
            : r.status == "skip" ? "[SKIP] "
                                 : "[FAIL] ")
        << r.id << " (n<=" << r.n << ")";
    if (!r.witness.empty()) out << "  witness: " << r.witness;
    if (!r.note.empty()) out << "  note: " << r.note;
    out << "\n";
  }
  out << (report.pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return out.str();
}

std::string make_table(const TableOptions& opt) {
  if (opt.stats.empty()) throw std::invalid_argument("table needs at least one statistic");
  ClassSpec cls{};
  bool is_b = (opt.cls == "B");
  if (!is_b) cls = parse_class(opt.cls);

  // assign variables p,q,r,... to the statistics in order
  std::vector<std::pair<char, std::string>> vs;
  for (size_t i = 0; i < opt.stats.size(); ++i) vs.emplace_back(kVarNames[i], opt.stats[i]);

  nlohmann::ordered_json jrows = nlohmann::ordered_json::array();
  std::ostringstream csv;
  csv << "n";
  if (opt.stats.size() == 1) {
    csv << ",coefficients...";
  } else {
    for (const auto& s : opt.stats) csv << ',' << s;
    csv << ",count";
  }
  csv << "\n";

  for (int n = 0; n <= opt.n; ++n) {
    MPoly poly = is_b ? signed_class_polynomial_named(n, vs)
                      : class_polynomial_named(cls, n, vs);
    if (opt.stats.size() == 1) {
      int deg = poly.degree(kVarNames[0]);
      std::vector<std::string> coeffs;
      for (int k = 0; k <= deg; ++k) {
        Rat c = poly.coeff_of(kVarNames[0], k).constant_term();
        std::ostringstream t;
        t << c;
        coeffs.push_back(t.str());
      }
      csv << n;
      for (const auto& c : coeffs) csv << ',' << c;
      csv << "\n";
      nlohmann::ordered_json row;
      row["n"] = n;
      row["coefficients"] = coeffs;
      jrows.push_back(row);
    } else {
      for (const auto& [e, c] : poly.terms()) {
        csv << n;
        nlohmann::ordered_json row;
        row["n"] = n;
        nlohmann::ordered_json exps = nlohmann::ordered_json::array();
        for (size_t i = 0; i < opt.stats.size(); ++i) {
          csv << ',' << e[var_index(kVarNames[i])];
          exps.push_back(e[var_index(kVarNames[i])]);
        }
        std::ostringstream t;
        t << c;
        csv << ',' << t.str() << "\n";
        row["exponents"] = exps;
        row["count"] = t.str();
        jrows.push_back(row);
      }
    }
  }

  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["class"] = opt.cls;
    j["stats"] = opt.stats;
    j["rows"] = jrows;
    return j.dump(2) + "\n";
  }
  if (opt.format != "csv") throw std::invalid_argument("format must be csv or json");
  return csv.str();
}

}  // namespace permcf
