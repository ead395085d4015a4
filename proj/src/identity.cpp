#include "permcf/identity.hpp"

#include <cmath>
#include <sstream>

namespace permcf {

MPoly class_polynomial(const ClassSpec& cls, int n,
                       const std::function<void(const Permutation&, ExpVec&)>& exps) {
  MPoly total;
  for_each_in_class(cls, n, [&](const Permutation& p) {
    ExpVec e{};
    exps(p, e);
    total.add_term(e, Rat(1));
  });
  return total;
}

MPoly signed_class_polynomial(
    int n, const std::function<void(const SignedPermutation&, ExpVec&)>& exps) {
  MPoly total;
  for_each_signed(n, [&](const SignedPermutation& p) {
    ExpVec e{};
    exps(p, e);
    total.add_term(e, Rat(1));
  });
  return total;
}

MPoly class_polynomial_named(const ClassSpec& cls, int n,
                             const std::vector<std::pair<char, std::string>>& stats) {
  std::vector<std::pair<int, std::string>> idx;
  for (const auto& [v, name] : stats) idx.emplace_back(var_index(v), name);
  return class_polynomial(cls, n, [&](const Permutation& p, ExpVec& e) {
    for (const auto& [vi, name] : idx) e[vi] += static_cast<int>(stat_by_name(name, p));
  });
}

MPoly signed_class_polynomial_named(
    int n, const std::vector<std::pair<char, std::string>>& stats) {
  std::vector<std::pair<int, std::string>> idx;
  for (const auto& [v, name] : stats) idx.emplace_back(var_index(v), name);
  return signed_class_polynomial(n, [&](const SignedPermutation& p, ExpVec& e) {
    for (const auto& [vi, name] : idx) e[vi] += static_cast<int>(stat_by_name(name, p));
  });
}

std::vector<int> first_primes(int n) {
  std::vector<int> primes;
  for (int c = 2; static_cast<int>(primes.size()) < n; ++c) {
    bool ok = true;
    for (int p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        ok = false;
        break;
      }
    }
    if (ok) primes.push_back(c);
  }
  return primes;
}

Rat rat_pow(const Rat& base, int e) {
  if (e < 0) {
    if (base == 0) throw PoleError("0 raised to a negative power");
    return Rat(1) / rat_pow(base, -e);
  }
  Rat r(1), b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

GridResult grid_identity_check(const Evaluator& lhs, const Evaluator& rhs,
                               const std::vector<std::pair<char, int>>& bounds) {
  GridResult res;
  int dims = static_cast<int>(bounds.size());
  int total_primes = 0;
  for (const auto& [v, b] : bounds) total_primes += b + 1;
  std::vector<int> primes = first_primes(total_primes + 16 * dims);

  std::vector<int> var_of(dims);
  std::vector<std::vector<Rat>> values(dims);
  int next_prime = 0;
  for (int d = 0; d < dims; ++d) {
    var_of[d] = var_index(bounds[d].first);
    for (int k = 0; k <= bounds[d].second; ++k)
      values[d].push_back(Rat(primes[next_prime++]));
  }

  std::vector<int> odo(dims, 0);
  while (true) {
    Point at{};
    for (int d = 0; d < dims; ++d) at[var_of[d]] = values[d][odo[d]];
    bool evaluated = false;
    for (int attempt = 0; attempt < 8 && !evaluated; ++attempt) {
      try {
        Rat l = lhs(at);
        Rat r = rhs(at);
        ++res.points;
        evaluated = true;
        if (l != r) {
          std::ostringstream w;
          for (int d = 0; d < dims; ++d)
            w << bounds[d].first << "=" << at[var_of[d]] << ' ';
          w << "lhs=" << l << " rhs=" << r;
          res.pass = false;
          res.witness = w.str();
          return res;
        }
      } catch (const PoleError&) {
        // shift the whole point to fresh primes and retry
        ++res.replaced;
        for (int d = 0; d < dims; ++d) at[var_of[d]] = Rat(primes[next_prime++ % primes.size()]);
      }
    }
    if (!evaluated)
      throw std::runtime_error("grid point could not be evaluated (persistent poles)");
    int d = 0;
    while (d < dims && ++odo[d] > bounds[d].second) odo[d++] = 0;
    if (d == dims) break;
    if (dims == 0) break;
  }
  return res;
}

SpotResult float_spot_check(const DEvaluator& lhs, const DEvaluator& rhs,
                            const std::vector<DPoint>& points, double tol) {
  SpotResult res;
  for (const DPoint& at : points) {
    double l, r;
    try {
      l = lhs(at);
      r = rhs(at);
    } catch (const DomainError&) {
      ++res.rejected;
      continue;
    }
    ++res.used;
    if (std::abs(l - r) > tol * std::max(1.0, std::abs(l))) {
      std::ostringstream w;
      w << "point (";
      for (int i = 0; i < kNumVars; ++i)
        if (at[i] != 0) w << kVarNames[i] << '=' << at[i] << ' ';
      w << ") lhs=" << l << " rhs=" << r;
      res.pass = false;
      res.witness = w.str();
      return res;
    }
  }
  return res;
}

}  // namespace permcf
