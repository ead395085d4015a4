#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "permcf/mpoly.hpp"
#include "permcf/perm.hpp"
#include "permcf/statistics.hpp"

namespace permcf {

/// Thrown by an exact evaluator whose denominator vanishes at a point.
struct PoleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Thrown by a numeric evaluator at an inadmissible point.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Generating polynomial of a class: exponents provided per element.
MPoly class_polynomial(const ClassSpec& cls, int n,
                       const std::function<void(const Permutation&, ExpVec&)>& exps);
MPoly signed_class_polynomial(int n,
                              const std::function<void(const SignedPermutation&, ExpVec&)>& exps);

/// Named-statistic form used by the CLI: pairs (variable, statistic name).
MPoly class_polynomial_named(const ClassSpec& cls, int n,
                             const std::vector<std::pair<char, std::string>>& stats);
MPoly signed_class_polynomial_named(int n,
                                    const std::vector<std::pair<char, std::string>>& stats);

using Evaluator = std::function<Rat(const Point&)>;

struct GridResult {
  bool pass = true;
  std::string witness;   // failing point and both values
  long points = 0;       // points compared
  int replaced = 0;      // pole-hit points that were shifted
};

/// Deterministic grid check: each bound variable ranges over the first
/// (bound+1) primes; both sides evaluated exactly and compared everywhere.
/// A PoleError shifts the offending coordinate to a fresh prime (logged in
/// `replaced`).  Unbound variables stay at 0.
GridResult grid_identity_check(const Evaluator& lhs, const Evaluator& rhs,
                               const std::vector<std::pair<char, int>>& bounds);

using DEvaluator = std::function<double(const DPoint&)>;

struct SpotResult {
  bool pass = true;
  std::string witness;
  int used = 0;
  int rejected = 0;
};

/// |lhs-rhs| <= tol*max(1,|lhs|) at every admissible point; points whose
/// evaluation throws DomainError are rejected (and counted).
SpotResult float_spot_check(const DEvaluator& lhs, const DEvaluator& rhs,
                            const std::vector<DPoint>& points, double tol);

/// First n primes (grid coordinates).
std::vector<int> first_primes(int n);

/// Exact rational power with negative exponents allowed.
Rat rat_pow(const Rat& base, int e);

}  // namespace permcf
