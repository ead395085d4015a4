#pragma once

#include <functional>
#include <vector>

#include "permcf/mpoly.hpp"

namespace permcf {

/// Truncated power series in z with MPoly coefficients.
/// EGF mode stores a_k with the series meaning sum a_k z^k / k!.
class SeriesZ {
 public:
  enum class Mode { OGF, EGF };

  SeriesZ(int order, Mode mode = Mode::OGF)
      : order_(order), mode_(mode), c_(order + 1) {
    if (order < 0) throw std::invalid_argument("negative series order");
  }

  static SeriesZ one(int order, Mode mode = Mode::OGF) {
    SeriesZ s(order, mode);
    s.c_[0] = MPoly(1L);
    return s;
  }

  int order() const { return order_; }
  Mode mode() const { return mode_; }
  const MPoly& operator[](int k) const { return c_.at(k); }
  MPoly& operator[](int k) { return c_.at(k); }

  SeriesZ operator+(const SeriesZ& o) const;
  SeriesZ operator-(const SeriesZ& o) const;
  SeriesZ operator*(const SeriesZ& o) const;  // mode-aware product
  bool operator==(const SeriesZ& o) const;

  /// Multiplicative inverse; requires constant term 1.
  SeriesZ inverse() const;

  /// z -> factor * z, i.e. a_k *= factor^k.
  SeriesZ scale_argument(const MPoly& factor) const;

  /// Multiply by z^k (OGF); truncates at the stored order.
  SeriesZ shift_up(int k) const;

  SeriesZ to_mode(Mode m) const;  // exact conversion via k! factors

  std::string str() const;

 private:
  void check_compatible(const SeriesZ& o) const;
  int order_;
  Mode mode_;
  std::vector<MPoly> c_;
};

/// EGF of e^{c z}: coefficients c^k.
SeriesZ exp_linear(const MPoly& c, int order);

Int factorial(int n);
Int binomial(int n, int k);

}  // namespace permcf
