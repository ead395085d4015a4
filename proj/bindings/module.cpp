#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "permcf/bijections.hpp"
#include "permcf/cfrac.hpp"
#include "permcf/harness.hpp"
#include "permcf/identity.hpp"
#include "permcf/statistics.hpp"

namespace py = pybind11;
using namespace permcf;

namespace {

Permutation from_word(const std::vector<int>& word) { return Permutation(word); }

std::vector<int> to_word(const Permutation& p) {
  std::vector<int> out(p.size());
  for (int i = 1; i <= p.size(); ++i) out[i - 1] = p(i);
  return out;
}

}  // namespace

PYBIND11_MODULE(permcf, m) {
  m.doc() = "permutation statistics, encoder bijections and exact continued fractions";

  m.def("stat", [](const std::string& name, const std::vector<int>& word) {
    return stat_by_name(name, from_word(word));
  },
        py::arg("name"), py::arg("word"), "evaluate a named statistic on a one-line word");

  m.def("signed_stat", [](const std::string& name, const std::vector<int>& word) {
    return stat_by_name(name, SignedPermutation(word));
  },
        py::arg("name"), py::arg("word"));

  m.def("stat_names", [] { return stat_names(); });
  m.def("signed_stat_names", [] { return signed_stat_names(); });

  m.def("apply", [](const std::string& bijection, const std::vector<int>& word) -> py::object {
    BijectionResult r = apply_bijection(bijection, from_word(word));
    if (r.is_history) return py::cast(r.history.str());
    return py::cast(to_word(r.perm));
  },
        py::arg("bijection"), py::arg("word"),
        "apply a named bijection; returns a word or a serialized history");

  m.def("bijection_names", [] { return bijection_names(); });

  m.def("cf_expand", [](const std::string& spec, int order) {
    SeriesZ s = cf_expand(named_cf_spec(spec), order);
    std::vector<std::string> out;
    for (int k = 0; k <= order; ++k) out.push_back(s[k].str());
    return out;
  },
        py::arg("spec"), py::arg("order"),
        "coefficients of a named continued fraction, as canonical strings");

  m.def("cf_spec_names", [] { return named_cf_spec_names(); });

  m.def("gamma_expand", [](const std::string& poly, int m) {
    GammaExpansion g = gamma_expand(MPoly::parse(poly), m);
    if (!g.ok) throw std::invalid_argument("not gamma-expandable; residual " + g.residual.str());
    std::vector<std::string> out;
    for (const Rat& r : g.gamma) {
      std::ostringstream s;
      s << r;
      out.push_back(s.str());
    }
    return out;
  },
        py::arg("poly"), py::arg("m"));

  m.def("class_polynomial", [](const std::string& cls, int n,
                               const std::vector<std::string>& stats) {
    std::vector<std::pair<char, std::string>> vs;
    for (size_t i = 0; i < stats.size(); ++i) vs.emplace_back(kVarNames[i], stats[i]);
    if (cls == "B") return signed_class_polynomial_named(n, vs).str();
    return class_polynomial_named(parse_class(cls), n, vs).str();
  },
        py::arg("cls"), py::arg("n"), py::arg("stats"),
        "generating polynomial of named statistics over a class (variables p,q,r,... in order)");

  m.def("verify", [](const std::vector<std::string>& ids, int max_n) {
    VerifyConfig cfg;
    cfg.ids = ids;
    cfg.max_n = max_n;
    Report r = verify(cfg);
    py::list cases;
    for (const auto& c : r.cases) {
      py::dict d;
      d["id"] = c.id;
      d["status"] = c.status;
      d["n"] = c.n;
      if (!c.witness.empty()) d["witness"] = c.witness;
      if (!c.note.empty()) d["note"] = c.note;
      cases.append(d);
    }
    py::dict out;
    out["version"] = r.version;
    out["pass"] = r.pass;
    out["cases"] = cases;
    return out;
  },
        py::arg("ids") = std::vector<std::string>{}, py::arg("max_n") = -1,
        "run registry checks; empty ids means the full registry");

  m.def("registry_ids", [] { return registry_ids(); });

  m.def("table", [](const std::string& cls, const std::vector<std::string>& stats, int n,
                    const std::string& format) {
    TableOptions opt;
    opt.cls = cls;
    opt.stats = stats;
    opt.n = n;
    opt.format = format;
    return make_table(opt);
  },
        py::arg("cls"), py::arg("stats"), py::arg("n"), py::arg("format") = "csv");
}
