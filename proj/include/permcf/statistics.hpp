#pragma once

#include <optional>
#include <vector>

#include "permcf/perm.hpp"

namespace permcf {

/// Boundary convention for the linear value classification:
/// sigma(0)-sigma(n+1) read as 0-0, 0-inf, or inf-0.
enum class Boundary { ZeroZero, ZeroInf, InfZero };

/// Linear statistics of one permutation under a fixed boundary convention.
/// All sets are sets of values, increasing.
struct LinearStatRecord {
  Boundary convention = Boundary::ZeroZero;
  std::vector<int> peak, valley, da, dd;
  int des = 0, asc = 0;
  // 0-inf only: double ascents that are left-to-right maxima / right-to-left minima
  std::optional<int> fmax, amin;
  // inf-0 only: double descents that are right-to-left maxima / left-to-right minima
  std::optional<int> amax, fmin;

  int pk() const { return static_cast<int>(peak.size()); }
  int val() const { return static_cast<int>(valley.size()); }
  int da_count() const { return static_cast<int>(da.size()); }
  int dd_count() const { return static_cast<int>(dd.size()); }
  int fmax_count() const;  // throws outside 0-inf
  int amin_count() const;
  int amax_count() const;  // throws outside inf-0
  int fmin_count() const;
};

LinearStatRecord linear_stats(const Permutation& p, Boundary convention);

/// Cyclic statistics; value sets except exc/drop which are position sets.
struct CyclicStatRecord {
  std::vector<int> cpeak, cval, cda, cdd, fix;
  std::vector<int> exc_set, drop_set;
  int cyc = 0;

  int cpk() const { return static_cast<int>(cpeak.size()); }
  int cval_count() const { return static_cast<int>(cval.size()); }
  int cda_count() const { return static_cast<int>(cda.size()); }
  int cdd_count() const { return static_cast<int>(cdd.size()); }
  int fix_count() const { return static_cast<int>(fix.size()); }
  int exc() const { return static_cast<int>(exc_set.size()); }
  int drop() const { return static_cast<int>(drop_set.size()); }
  int wex() const { return exc() + fix_count(); }
};

CyclicStatRecord cyclic_stats(const Permutation& p);

/// Cyclic statistics of the star companion, restricted to [n-1]
/// (drop* over [n]).
struct StarStatRecord {
  std::vector<int> cpeak, cval, cda, cdd, fix, wex;  // subsets of [n-1]
  std::vector<int> drop;                             // subset of [n]
  int cyc_star = 0;

  int cpk() const { return static_cast<int>(cpeak.size()); }
  int cval_count() const { return static_cast<int>(cval.size()); }
  int cda_count() const { return static_cast<int>(cda.size()); }
  int cdd_count() const { return static_cast<int>(cdd.size()); }
  int fix_count() const { return static_cast<int>(fix.size()); }
  int wex_count() const { return static_cast<int>(wex.size()); }
  int drop_count() const { return static_cast<int>(drop.size()); }
};

StarStatRecord star_stats(const Permutation& p);

/// Per-index vincular pattern counts, indexed by VALUE i (entry [i-1]),
/// plus the totals (which are also recomputed by pair enumeration).
struct VincularRecord {
  std::vector<int> v31_2, v2_31, v2_13, v13_2;
  long t31_2 = 0, t2_31 = 0, t2_13 = 0, t13_2 = 0;
};

VincularRecord vincular_counts(const Permutation& p);

/// Crossing/nesting arc statistics, per position, plus inv and icr.
struct NestCrosRecord {
  std::vector<int> nest_i, cros_i;  // entry [i-1] for position i
  long nest = 0, cros = 0, icr = 0, inv = 0;
};

NestCrosRecord nest_cros(const Permutation& p);

/// Shifted cyclic sets of sigma in S_{n+1}; four disjoint sets covering [n].
struct ShiftedSetRecord {
  std::vector<int> scval, scpeak, sde, sdn;
  int scda() const { return static_cast<int>(sde.size()); }
};

ShiftedSetRecord shifted_sets(const Permutation& p);

struct TypeBStatRecord {
  int des_b = 0, exc_b = 0, neg = 0;
};

TypeBStatRecord type_b_stats(const SignedPermutation& p);

/// Position of value v in the friends order 1 < -1 < 2 < -2 < ...
int friends_rank(int v);

/// Name-keyed statistic dispatch; throws std::invalid_argument listing the
/// registry on an unknown name.
long stat_by_name(const std::string& name, const Permutation& p);
long stat_by_name(const std::string& name, const SignedPermutation& p);
std::vector<std::string> stat_names();         // linear/cyclic registry
std::vector<std::string> signed_stat_names();  // type B registry

}  // namespace permcf
