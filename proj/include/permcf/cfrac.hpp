#pragma once

#include <functional>
#include <string>
#include <vector>

#include "permcf/series.hpp"

namespace permcf {

/// A Jacobi- or Stieltjes-type continued fraction given by coefficient
/// sequences.  J-fractions use b (n >= 0) and lambda (n >= 1); S-fractions
/// use alpha (n >= 1) only.
struct CFSpec {
  enum class Kind { J, S };
  Kind kind = Kind::J;
  std::function<MPoly(int)> b;      // J only
  std::function<MPoly(int)> coeff;  // lambda_n (J) or alpha_n (S)
};

/// Truncated expansion of the continued fraction; exact, via the
/// depth-(N/2+1) (J) or depth-(N+1) (S) convergent.
SeriesZ cf_expand(const CFSpec& spec, int order);

SeriesZ jfraction_expand(std::function<MPoly(int)> b, std::function<MPoly(int)> lam,
                         int order);
SeriesZ sfraction_expand(std::function<MPoly(int)> alpha, int order);

/// Contraction of an S-fraction into two J-type forms.
///   first:  1/(1 - a1 z - a1 a2 z^2 / (1 - (a2+a3) z - ...))
///   second: 1 + a1 z/(1 - (a1+a2) z - a2 a3 z^2 / (1 - (a3+a4) z - ...))
/// `first` is a plain J-spec; the second form is head + a1*z*J[second_inner].
struct Contraction {
  CFSpec first;
  CFSpec second_inner;
  MPoly alpha1;
};
Contraction contract(std::function<MPoly(int)> alpha);

/// Series of the second contraction form.
SeriesZ expand_contraction_second(const Contraction& c, int order);

/// Named coefficient specs used by the CLI and the verification registry.
/// Throws std::invalid_argument with the list of valid names on a miss.
CFSpec named_cf_spec(const std::string& name);
std::vector<std::string> named_cf_spec_names();

}  // namespace permcf
