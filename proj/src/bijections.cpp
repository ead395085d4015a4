#include "permcf/bijections.hpp"

#include <algorithm>
#include <sstream>

namespace permcf {

namespace {

[[noreturn]] void bug(const std::string& what) {
  throw std::logic_error("bijection internal invariant failed: " + what);
}

// Insert each letter (largest first) so that exactly want[x] larger letters
// sit to its left; the resulting word has inversion bottom number want[x]
// at every letter x.
std::vector<int> arrange_by_inv_bottom(std::vector<int> letters,
                                       const std::vector<int>& want) {
  std::sort(letters.begin(), letters.end(), std::greater<int>());
  std::vector<int> word;
  for (int x : letters) {
    int k = want[x - 1];
    if (k > static_cast<int>(word.size()))
      bug("prescribed inversion bottom number is infeasible");
    word.insert(word.begin() + k, x);
  }
  return word;
}

// Insert each letter (smallest first) so that exactly want[x] smaller letters
// sit to its right: inversion top number want[x].
std::vector<int> arrange_by_inv_top(std::vector<int> letters,
                                    const std::vector<int>& want) {
  std::sort(letters.begin(), letters.end());
  std::vector<int> word;
  for (int x : letters) {
    int k = want[x - 1];
    if (k > static_cast<int>(word.size()))
      bug("prescribed inversion top number is infeasible");
    word.insert(word.end() - k, x);
  }
  return word;
}

}  // namespace

Permutation phi(const Permutation& p) {
  int n = p.size();
  if (n == 0) return p;
  VincularRecord vinc = vincular_counts(p);

  std::vector<char> desc_bottom(n + 1, 0), desc_top(n + 1, 0);
  for (int i = 2; i <= n; ++i)
    if (p(i - 1) > p(i)) desc_bottom[p(i)] = 1;
  for (int i = 1; i < n; ++i)
    if (p(i) > p(i + 1)) desc_top[p(i)] = 1;

  std::vector<int> f, g, tops, nontops;
  for (int v = 1; v <= n; ++v) {
    (desc_bottom[v] ? f : g).push_back(v);
    (desc_top[v] ? tops : nontops).push_back(v);
  }

  std::vector<int> fp = arrange_by_inv_bottom(tops, vinc.v2_31);
  std::vector<int> gp = arrange_by_inv_top(nontops, vinc.v2_31);

  // verify the achieved inversion numbers match the prescription
  for (size_t i = 0; i < fp.size(); ++i) {
    int got = 0;
    for (size_t j = 0; j < i; ++j)
      if (fp[j] > fp[i]) ++got;
    if (got != vinc.v2_31[fp[i] - 1]) bug("inversion bottom number mismatch");
  }
  for (size_t i = 0; i < gp.size(); ++i) {
    int got = 0;
    for (size_t j = i + 1; j < gp.size(); ++j)
      if (gp[j] < gp[i]) ++got;
    if (got != vinc.v2_31[gp[i] - 1]) bug("inversion top number mismatch");
  }

  // columns (top=f/g, bottom=f'/g') sorted by the bottom row give tau
  std::vector<int> w(n);
  for (size_t k = 0; k < f.size(); ++k) w[fp[k] - 1] = f[k];
  for (size_t k = 0; k < g.size(); ++k) w[gp[k] - 1] = g[k];
  return Permutation(w);
}

Permutation psi(const Permutation& p) {
  int n = p.size();
  Permutation tau = phi(hat(p));
  if (tau(1) != n + 1) bug("phi(sigma-hat) must start with n+1");
  std::vector<int> w(n);
  for (int i = 2; i <= n + 1; ++i) w[i - 2] = tau(i);
  return Permutation(w);
}

namespace {

LaguerreHistory encode(LHVariant variant, int n,
                       const std::function<Step(int)>& step_of,
                       const std::function<int(int)>& weight_of,
                       const char* name) {
  std::vector<Step> steps(n);
  std::vector<int> p(n);
  for (int i = 1; i <= n; ++i) {
    steps[i - 1] = step_of(i);
    p[i - 1] = weight_of(i);
  }
  LaguerreHistory h;
  h.variant = variant;
  h.path = MotzkinWord(std::move(steps));
  h.p = std::move(p);
  LHValidation v = validate(h);
  if (!v.ok) bug(std::string(name) + " produced an invalid history: " + v.what);
  return h;
}

Step linear_step(const LinearStatRecord& rec, int v) {
  if (std::binary_search(rec.valley.begin(), rec.valley.end(), v)) return Step::U;
  if (std::binary_search(rec.peak.begin(), rec.peak.end(), v)) return Step::D;
  if (std::binary_search(rec.da.begin(), rec.da.end(), v)) return Step::Lb;
  return Step::Lr;
}

}  // namespace

LaguerreHistory psi_fv(const Permutation& p) {
  int m = p.size();
  if (m < 1) throw std::invalid_argument("psi_fv needs sigma in S_{n+1}, n >= 0");
  int n = m - 1;
  LinearStatRecord rec = linear_stats(p, Boundary::ZeroZero);
  VincularRecord vinc = vincular_counts(p);
  return encode(
      LHVariant::Full, n, [&](int i) { return linear_step(rec, i); },
      [&](int i) { return vinc.v2_13[i - 1]; }, "psi_fv");
}

LaguerreHistory phi_fv(const Permutation& p) {
  int n = p.size();
  LinearStatRecord rec = linear_stats(p, Boundary::ZeroInf);
  VincularRecord vinc = vincular_counts(p);
  return encode(
      LHVariant::Restricted, n, [&](int i) { return linear_step(rec, i); },
      [&](int i) { return vinc.v2_31[i - 1]; }, "phi_fv");
}

LaguerreHistory phi_fz(const Permutation& p) {
  int n = p.size();
  CyclicStatRecord rec = cyclic_stats(p);
  NestCrosRecord nc = nest_cros(p);
  auto step_of = [&](int v) {
    if (std::binary_search(rec.cval.begin(), rec.cval.end(), v)) return Step::U;
    if (std::binary_search(rec.cpeak.begin(), rec.cpeak.end(), v)) return Step::D;
    if (std::binary_search(rec.cdd.begin(), rec.cdd.end(), v)) return Step::Lr;
    return Step::Lb;  // double excedances and fixed points
  };
  return encode(
      LHVariant::Restricted, n, step_of, [&](int i) { return nc.nest_i[i - 1]; },
      "phi_fz");
}

LaguerreHistory psi_yzl(const Permutation& p) {
  int m = p.size();
  if (m < 1) throw std::invalid_argument("psi_yzl needs sigma in S_{n+1}, n >= 0");
  int n = m - 1;
  ShiftedSetRecord rec = shifted_sets(p);
  NestCrosRecord nc = nest_cros(p);
  auto step_of = [&](int i) {
    if (std::binary_search(rec.scval.begin(), rec.scval.end(), i)) return Step::U;
    if (std::binary_search(rec.scpeak.begin(), rec.scpeak.end(), i)) return Step::D;
    if (std::binary_search(rec.sde.begin(), rec.sde.end(), i)) return Step::Lb;
    return Step::Lr;
  };
  return encode(
      LHVariant::Full, n, step_of, [&](int i) { return nc.nest_i[i - 1]; },
      "psi_yzl");
}

LaguerreHistory phi_fz_variant(const Permutation& p) {
  int n = p.size();
  CyclicStatRecord rec = cyclic_stats(p);
  NestCrosRecord nc = nest_cros(p);
  auto step_of = [&](int v) {
    if (std::binary_search(rec.fix.begin(), rec.fix.end(), v)) return Step::Ly;
    if (std::binary_search(rec.cval.begin(), rec.cval.end(), v)) return Step::U;
    if (std::binary_search(rec.cpeak.begin(), rec.cpeak.end(), v)) return Step::D;
    if (std::binary_search(rec.cdd.begin(), rec.cdd.end(), v)) return Step::Lr;
    return Step::Lb;
  };
  return encode(
      LHVariant::VariantRestricted, n, step_of,
      [&](int i) { return nc.nest_i[i - 1]; }, "phi_fz_variant");
}

MotzkinWord theta(const MotzkinWord& w) {
  std::vector<Step> steps = w.steps();
  for (Step& s : steps) {
    if (s == Step::Lb)
      s = Step::Lr;
    else if (s == Step::Lr)
      s = Step::Lb;
  }
  return MotzkinWord(std::move(steps));
}

LaguerreHistory theta(const LaguerreHistory& h) {
  LaguerreHistory out = h;
  out.path = theta(h.path);
  return out;
}

Permutation phi_tilde(const Permutation& p) {
  static const Permutation pat231 = Permutation({2, 3, 1});
  if (!avoids(p, pat231))
    throw std::domain_error("phi_tilde needs a 231-avoiding input");
  return phi(p);
}

Permutation psi_tilde(const Permutation& p) {
  static const Permutation pat213 = Permutation({2, 1, 3});
  if (!avoids(p, pat213))
    throw std::domain_error("psi_tilde needs a 213-avoiding input");
  return psi(p);
}

BijectionResult apply_bijection(const std::string& name, const Permutation& p) {
  BijectionResult res;
  if (name == "phi") {
    res.perm = phi(p);
  } else if (name == "psi") {
    res.perm = psi(p);
  } else if (name == "phi_tilde") {
    res.perm = phi_tilde(p);
  } else if (name == "psi_tilde") {
    res.perm = psi_tilde(p);
  } else if (name == "psi_fv") {
    res.is_history = true;
    res.history = psi_fv(p);
  } else if (name == "phi_fv") {
    res.is_history = true;
    res.history = phi_fv(p);
  } else if (name == "phi_fz") {
    res.is_history = true;
    res.history = phi_fz(p);
  } else if (name == "psi_yzl") {
    res.is_history = true;
    res.history = psi_yzl(p);
  } else if (name == "phi_fz_var") {
    res.is_history = true;
    res.history = phi_fz_variant(p);
  } else {
    std::ostringstream err;
    err << "unknown bijection '" << name << "'; valid names:";
    for (const auto& nm : bijection_names()) err << ' ' << nm;
    throw std::invalid_argument(err.str());
  }
  return res;
}

std::vector<std::string> bijection_names() {
  return {"phi",    "psi",     "psi_fv",     "phi_fv",   "phi_fz",
          "psi_yzl", "phi_fz_var", "phi_tilde", "psi_tilde"};
}

}  // namespace permcf
