#include "permcf/statistics.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace permcf {

namespace {

int boundary_left(Boundary b, int n) { return b == Boundary::InfZero ? n + 1 : 0; }
int boundary_right(Boundary b, int n) { return b == Boundary::ZeroInf ? n + 1 : 0; }

}  // namespace

int LinearStatRecord::fmax_count() const {
  if (!fmax) throw std::logic_error("fmax is defined under the 0-inf convention only");
  return *fmax;
}
int LinearStatRecord::amin_count() const {
  if (!amin) throw std::logic_error("amin is defined under the 0-inf convention only");
  return *amin;
}
int LinearStatRecord::amax_count() const {
  if (!amax) throw std::logic_error("amax is defined under the inf-0 convention only");
  return *amax;
}
int LinearStatRecord::fmin_count() const {
  if (!fmin) throw std::logic_error("fmin is defined under the inf-0 convention only");
  return *fmin;
}

LinearStatRecord linear_stats(const Permutation& p, Boundary convention) {
  int n = p.size();
  LinearStatRecord rec;
  rec.convention = convention;
  int lb = boundary_left(convention, n), rb = boundary_right(convention, n);

  std::vector<int> prefix_max(n + 1, 0), prefix_min(n + 2, n + 1);
  std::vector<int> suffix_max(n + 2, 0), suffix_min(n + 2, n + 1);
  for (int i = 1; i <= n; ++i) {
    prefix_max[i] = std::max(prefix_max[i - 1], p(i));
    prefix_min[i] = std::min(prefix_min[i - 1], p(i));
  }
  for (int i = n; i >= 1; --i) {
    suffix_max[i] = std::max(suffix_max[i + 1], p(i));
    suffix_min[i] = std::min(suffix_min[i + 1], p(i));
  }

  int fmax = 0, amin = 0, amax = 0, fmin = 0;
  for (int i = 1; i <= n; ++i) {
    int a = (i == 1) ? lb : p(i - 1);
    int b = (i == n) ? rb : p(i + 1);
    int x = p(i);
    if (a < x && x > b) {
      rec.peak.push_back(x);
    } else if (a > x && x < b) {
      rec.valley.push_back(x);
    } else if (a < x && x < b) {
      rec.da.push_back(x);
      if (x == prefix_max[i]) ++fmax;
      if (x == suffix_min[i]) ++amin;
    } else {
      rec.dd.push_back(x);
      if (x == suffix_max[i]) ++amax;
      if (x == prefix_min[i]) ++fmin;
    }
    if (i < n && p(i) > p(i + 1)) ++rec.des;
  }
  rec.asc = (n == 0) ? 0 : n - 1 - rec.des;
  for (auto* s : {&rec.peak, &rec.valley, &rec.da, &rec.dd})
    std::sort(s->begin(), s->end());
  if (convention == Boundary::ZeroInf) {
    rec.fmax = fmax;
    rec.amin = amin;
  } else if (convention == Boundary::InfZero) {
    rec.amax = amax;
    rec.fmin = fmin;
  }
  return rec;
}

CyclicStatRecord cyclic_stats(const Permutation& p) {
  int n = p.size();
  CyclicStatRecord rec;
  Permutation pinv = inverse(p);
  for (int x = 1; x <= n; ++x) {
    int i = pinv(x), y = p(x);
    if (x == y)
      rec.fix.push_back(x);
    else if (i < x && x > y)
      rec.cpeak.push_back(x);
    else if (i > x && x < y)
      rec.cval.push_back(x);
    else if (i < x && x < y)
      rec.cda.push_back(x);
    else
      rec.cdd.push_back(x);
  }
  for (int i = 1; i <= n; ++i) {
    if (p(i) > i) rec.exc_set.push_back(i);
    if (p(i) < i) rec.drop_set.push_back(i);
  }
  std::vector<char> seen(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    ++rec.cyc;
    for (int j = i; !seen[j]; j = p(j)) seen[j] = 1;
  }
  return rec;
}

StarStatRecord star_stats(const Permutation& p) {
  int n = p.size();
  StarMap m = star(p);
  StarStatRecord rec;
  for (int i = 1; i <= n - 1; ++i) {
    int pre = m.preimage(i), im = m(i);
    if (i == im)
      rec.fix.push_back(i);
    else if (pre < i && i > im)
      rec.cpeak.push_back(i);
    else if (pre > i && i < im)
      rec.cval.push_back(i);
    else if (pre < i && i < im)
      rec.cda.push_back(i);
    else
      rec.cdd.push_back(i);
    if (i <= im) rec.wex.push_back(i);
  }
  for (int i = 1; i <= n; ++i)
    if (i > m(i)) rec.drop.push_back(i);
  rec.cyc_star = m.cycle_count();
  return rec;
}

VincularRecord vincular_counts(const Permutation& p) {
  int n = p.size();
  VincularRecord rec;
  rec.v31_2.assign(n, 0);
  rec.v2_31.assign(n, 0);
  rec.v2_13.assign(n, 0);
  rec.v13_2.assign(n, 0);
  Permutation pos = inverse(p);
  for (int v = 1; v <= n; ++v) {
    int k = pos(v);
    for (int j = 2; j < k; ++j) {
      if (p(j) < v && v < p(j - 1)) ++rec.v31_2[v - 1];
      if (p(j - 1) < v && v < p(j)) ++rec.v13_2[v - 1];
    }
    for (int j = k + 1; j < n; ++j) {
      if (p(j + 1) < v && v < p(j)) ++rec.v2_31[v - 1];
      if (p(j) < v && v < p(j + 1)) ++rec.v2_13[v - 1];
    }
  }
  for (int v = 0; v < n; ++v) {
    rec.t31_2 += rec.v31_2[v];
    rec.t2_31 += rec.v2_31[v];
    rec.t2_13 += rec.v2_13[v];
    rec.t13_2 += rec.v13_2[v];
  }
  // independent totals by pair enumeration; the two routes must agree
  long a = 0, b = 0, c = 0, d = 0;
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j > i + 1) {
        if (p(i + 1) < p(j) && p(j) < p(i)) ++a;  // 31-2
        if (p(i) < p(j) && p(j) < p(i + 1)) ++d;  // 13-2
      }
      if (j < i) {
        if (p(i + 1) < p(j) && p(j) < p(i)) ++b;  // 2-31
        if (p(i) < p(j) && p(j) < p(i + 1)) ++c;  // 2-13
      }
    }
  }
  if (a != rec.t31_2 || b != rec.t2_31 || c != rec.t2_13 || d != rec.t13_2)
    throw std::logic_error("vincular totals disagree between the two counting routes");
  return rec;
}

NestCrosRecord nest_cros(const Permutation& p) {
  int n = p.size();
  NestCrosRecord rec;
  rec.nest_i.assign(n, 0);
  rec.cros_i.assign(n, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j < i && i < p(j) && p(j) < p(i)) ++rec.cros_i[i - 1];
      if (p(i) < p(j) && p(j) <= i && i < j) ++rec.cros_i[i - 1];
      if (j < i && i < p(i) && p(i) < p(j)) ++rec.nest_i[i - 1];
      if (p(j) < p(i) && p(i) <= i && i < j) ++rec.nest_i[i - 1];
    }
  }
  for (int i = 0; i < n; ++i) {
    rec.nest += rec.nest_i[i];
    rec.cros += rec.cros_i[i];
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (p(i) > p(j)) ++rec.inv;
  Permutation pinv = inverse(p);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j < i && i < pinv(j) && pinv(j) < pinv(i)) ++rec.icr;
      if (pinv(i) < pinv(j) && pinv(j) <= i && i < j) ++rec.icr;
    }
  return rec;
}

ShiftedSetRecord shifted_sets(const Permutation& p) {
  int m = p.size();
  if (m < 1) throw std::invalid_argument("shifted_sets needs sigma in S_{n+1}, n >= 0");
  int n = m - 1;
  Permutation pinv = inverse(p);
  ShiftedSetRecord rec;
  for (int i = 1; i <= n; ++i) {
    bool exc_here = i < p(i);
    bool weak_next = (i + 1) <= pinv(i + 1);
    if (exc_here && weak_next)
      rec.scval.push_back(i);
    else if (!exc_here && !weak_next)
      rec.scpeak.push_back(i);
    else if (exc_here)
      rec.sde.push_back(i);
    else
      rec.sdn.push_back(i);
  }
  return rec;
}

int friends_rank(int v) { return 2 * std::abs(v) - (v > 0 ? 1 : 0); }

TypeBStatRecord type_b_stats(const SignedPermutation& p) {
  int n = p.size();
  TypeBStatRecord rec;
  for (int i = 0; i < n; ++i) {
    int a = (i == 0) ? 0 : p(i);
    if (a > p(i + 1)) ++rec.des_b;
  }
  for (int i = 1; i <= n; ++i) {
    if (friends_rank(i) < friends_rank(p(i))) ++rec.exc_b;
    if (p(i) < 0) ++rec.neg;
  }
  return rec;
}

namespace {

using StatFn = long (*)(const Permutation&);

long stat_des(const Permutation& p) { return linear_stats(p, Boundary::ZeroZero).des; }
long stat_asc(const Permutation& p) { return linear_stats(p, Boundary::ZeroZero).asc; }

const std::map<std::string, StatFn>& registry() {
  static const std::map<std::string, StatFn> reg = {
      {"des", stat_des},
      {"asc", stat_asc},
      {"exc", [](const Permutation& p) { return (long)cyclic_stats(p).exc(); }},
      {"fix", [](const Permutation& p) { return (long)cyclic_stats(p).fix_count(); }},
      {"wex", [](const Permutation& p) { return (long)cyclic_stats(p).wex(); }},
      {"drop", [](const Permutation& p) { return (long)cyclic_stats(p).drop(); }},
      {"cyc", [](const Permutation& p) { return (long)cyclic_stats(p).cyc; }},
      {"pk", [](const Permutation& p) { return (long)linear_stats(p, Boundary::ZeroZero).pk(); }},
      {"pk'", [](const Permutation& p) { return (long)linear_stats(p, Boundary::ZeroZero).pk() - (p.size() >= 1 ? 1 : 0); }},
      {"val", [](const Permutation& p) { return (long)linear_stats(p, Boundary::ZeroZero).val(); }},
      {"da", [](const Permutation& p) { return (long)linear_stats(p, Boundary::ZeroZero).da_count(); }},
      {"dd", [](const Permutation& p) { return (long)linear_stats(p, Boundary::ZeroZero).dd_count(); }},
      {"lpk", [](const Permutation& p) { return (long)linear_stats(p, Boundary::ZeroInf).pk(); }},
      {"lval", [](const Permutation& p) { return (long)linear_stats(p, Boundary::ZeroInf).val(); }},
      {"lda", [](const Permutation& p) { return (long)linear_stats(p, Boundary::ZeroInf).da_count(); }},
      {"ldd", [](const Permutation& p) { return (long)linear_stats(p, Boundary::ZeroInf).dd_count(); }},
      {"rpk", [](const Permutation& p) { return (long)linear_stats(p, Boundary::InfZero).pk(); }},
      {"rval", [](const Permutation& p) { return (long)linear_stats(p, Boundary::InfZero).val(); }},
      {"rda", [](const Permutation& p) { return (long)linear_stats(p, Boundary::InfZero).da_count(); }},
      {"rdd", [](const Permutation& p) { return (long)linear_stats(p, Boundary::InfZero).dd_count(); }},
      {"fmax", [](const Permutation& p) { return (long)linear_stats(p, Boundary::ZeroInf).fmax_count(); }},
      {"amin", [](const Permutation& p) { return (long)linear_stats(p, Boundary::ZeroInf).amin_count(); }},
      {"amax", [](const Permutation& p) { return (long)linear_stats(p, Boundary::InfZero).amax_count(); }},
      {"fmin", [](const Permutation& p) { return (long)linear_stats(p, Boundary::InfZero).fmin_count(); }},
      {"cpk", [](const Permutation& p) { return (long)cyclic_stats(p).cpk(); }},
      {"cval", [](const Permutation& p) { return (long)cyclic_stats(p).cval_count(); }},
      {"cda", [](const Permutation& p) { return (long)cyclic_stats(p).cda_count(); }},
      {"cdd", [](const Permutation& p) { return (long)cyclic_stats(p).cdd_count(); }},
      {"cpk*", [](const Permutation& p) { return (long)star_stats(p).cpk(); }},
      {"cval*", [](const Permutation& p) { return (long)star_stats(p).cval_count(); }},
      {"cda*", [](const Permutation& p) { return (long)star_stats(p).cda_count(); }},
      {"cdd*", [](const Permutation& p) { return (long)star_stats(p).cdd_count(); }},
      {"fix*", [](const Permutation& p) { return (long)star_stats(p).fix_count(); }},
      {"wex*", [](const Permutation& p) { return (long)star_stats(p).wex_count(); }},
      {"drop*", [](const Permutation& p) { return (long)star_stats(p).drop_count(); }},
      {"cyc*", [](const Permutation& p) { return (long)star_stats(p).cyc_star; }},
      {"nest", [](const Permutation& p) { return nest_cros(p).nest; }},
      {"cros", [](const Permutation& p) { return nest_cros(p).cros; }},
      {"icr", [](const Permutation& p) { return nest_cros(p).icr; }},
      {"inv", [](const Permutation& p) { return nest_cros(p).inv; }},
      {"31-2", [](const Permutation& p) { return vincular_counts(p).t31_2; }},
      {"2-31", [](const Permutation& p) { return vincular_counts(p).t2_31; }},
      {"2-13", [](const Permutation& p) { return vincular_counts(p).t2_13; }},
      {"13-2", [](const Permutation& p) { return vincular_counts(p).t13_2; }},
      {"scda", [](const Permutation& p) { return (long)shifted_sets(p).scda(); }},
  };
  return reg;
}

using SignedStatFn = long (*)(const SignedPermutation&);

const std::map<std::string, SignedStatFn>& signed_registry() {
  static const std::map<std::string, SignedStatFn> reg = {
      {"des_B", [](const SignedPermutation& p) { return (long)type_b_stats(p).des_b; }},
      {"exc_B", [](const SignedPermutation& p) { return (long)type_b_stats(p).exc_b; }},
      {"neg", [](const SignedPermutation& p) { return (long)type_b_stats(p).neg; }},
  };
  return reg;
}

[[noreturn]] void unknown_stat(const std::string& name, bool signed_reg) {
  std::ostringstream err;
  err << "unknown statistic '" << name << "'; valid names:";
  if (signed_reg)
    for (const auto& n : signed_stat_names()) err << ' ' << n;
  else
    for (const auto& n : stat_names()) err << ' ' << n;
  throw std::invalid_argument(err.str());
}

}  // namespace

long stat_by_name(const std::string& name, const Permutation& p) {
  auto it = registry().find(name);
  if (it == registry().end()) unknown_stat(name, false);
  return it->second(p);
}

long stat_by_name(const std::string& name, const SignedPermutation& p) {
  auto it = signed_registry().find(name);
  if (it == signed_registry().end()) unknown_stat(name, true);
  return it->second(p);
}

std::vector<std::string> stat_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

std::vector<std::string> signed_stat_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : signed_registry()) out.push_back(k);
  return out;
}

}  // namespace permcf
