#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace permcf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Variables usable in polynomials, in fixed global order.
inline constexpr int kNumVars = 9;
inline constexpr std::array<char, kNumVars> kVarNames = {'p', 'q', 'r', 't', 'u',
                                                         'v', 'w', 'x', 'y'};

int var_index(char name);  // throws std::invalid_argument on unknown name

using ExpVec = std::array<int, kNumVars>;
using Point = std::array<Rat, kNumVars>;
using DPoint = std::array<double, kNumVars>;

inline constexpr ExpVec kZeroExp{};

/// Sparse multivariate polynomial over exact rationals.
/// Terms are kept in lexicographic exponent order with no zero coefficients,
/// so equal polynomials have identical representations.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(const Rat& c);
  explicit MPoly(long c);

  static MPoly var(char name, int exp = 1);
  static MPoly monomial(const Rat& c, const ExpVec& e);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  int degree(char name) const;
  int num_terms() const { return static_cast<int>(terms_.size()); }

  const std::map<ExpVec, Rat>& terms() const { return terms_; }

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& o) const;
  MPoly& operator*=(const MPoly& o);
  MPoly operator*(const Rat& c) const;
  MPoly pow(int e) const;
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return terms_ != o.terms_; }

  /// Divide by a scalar (exact).
  MPoly operator/(const Rat& c) const;

  Rat eval(const Point& at) const;
  double eval_double(const DPoint& at) const;

  /// Coefficient of name^k, as a polynomial in the remaining variables.
  MPoly coeff_of(char name, int k) const;

  /// t^m * P(1/t) == P, i.e. palindromic with center m/2.
  bool is_palindromic(char name, int m) const;

  /// Canonical text form, e.g. "1+4*t+t^2" or "-2*q*t^3".
  std::string str() const;

  /// Parse the canonical text form (also accepts '-' separators and spaces).
  static MPoly parse(const std::string& text);

  void add_term(const ExpVec& e, const Rat& c);

 private:
  std::map<ExpVec, Rat> terms_;
};

MPoly operator*(const Rat& c, const MPoly& p);

/// (a^n - b^n)/(a - b) as a polynomial: sum of a^i b^{n-1-i}.
MPoly pq_integer(int n, char a = 'p', char b = 'q');

/// Gamma-basis expansion: P = sum_k gamma_k * name^k * (1+name)^{m-2k}.
/// Returns the unique coefficient vector when it exists.  `ok` is false when
/// P is not expressible (non-palindromic); `residual` then holds the defect.
struct GammaExpansion {
  bool ok = false;
  std::vector<Rat> gamma;
  MPoly residual;
};
GammaExpansion gamma_expand(const MPoly& poly, int m, char name = 't');

}  // namespace permcf
