#include "permcf/series.hpp"

#include <sstream>

namespace permcf {

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

void SeriesZ::check_compatible(const SeriesZ& o) const {
  if (order_ != o.order_ || mode_ != o.mode_)
    throw std::invalid_argument("series order/mode mismatch");
}

SeriesZ SeriesZ::operator+(const SeriesZ& o) const {
  check_compatible(o);
  SeriesZ r(order_, mode_);
  for (int k = 0; k <= order_; ++k) r.c_[k] = c_[k] + o.c_[k];
  return r;
}

SeriesZ SeriesZ::operator-(const SeriesZ& o) const {
  check_compatible(o);
  SeriesZ r(order_, mode_);
  for (int k = 0; k <= order_; ++k) r.c_[k] = c_[k] - o.c_[k];
  return r;
}

SeriesZ SeriesZ::operator*(const SeriesZ& o) const {
  check_compatible(o);
  SeriesZ r(order_, mode_);
  for (int n = 0; n <= order_; ++n) {
    MPoly acc;
    for (int k = 0; k <= n; ++k) {
      if (c_[k].is_zero() || o.c_[n - k].is_zero()) continue;
      MPoly term = c_[k] * o.c_[n - k];
      if (mode_ == Mode::EGF) term = term * Rat(binomial(n, k));
      acc += term;
    }
    r.c_[n] = acc;
  }
  return r;
}

bool SeriesZ::operator==(const SeriesZ& o) const {
  if (order_ != o.order_ || mode_ != o.mode_) return false;
  for (int k = 0; k <= order_; ++k)
    if (!(c_[k] == o.c_[k])) return false;
  return true;
}

SeriesZ SeriesZ::inverse() const {
  if (mode_ != Mode::OGF)
    throw std::invalid_argument("inverse implemented for OGF mode only");
  if (!(c_[0] == MPoly(1L)))
    throw std::invalid_argument("series inverse requires constant term 1");
  SeriesZ r(order_, mode_);
  r.c_[0] = MPoly(1L);
  for (int n = 1; n <= order_; ++n) {
    MPoly acc;
    for (int k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
    r.c_[n] = -acc;
  }
  return r;
}

SeriesZ SeriesZ::scale_argument(const MPoly& factor) const {
  SeriesZ r(order_, mode_);
  MPoly f(1L);
  for (int k = 0; k <= order_; ++k) {
    r.c_[k] = c_[k] * f;
    f = f * factor;
  }
  return r;
}

SeriesZ SeriesZ::shift_up(int k) const {
  if (mode_ != Mode::OGF)
    throw std::invalid_argument("shift_up is an OGF operation");
  SeriesZ r(order_, mode_);
  for (int n = k; n <= order_; ++n) r.c_[n] = c_[n - k];
  return r;
}

SeriesZ SeriesZ::to_mode(Mode m) const {
  if (m == mode_) return *this;
  SeriesZ r(order_, m);
  for (int k = 0; k <= order_; ++k) {
    Rat f(factorial(k));
    // OGF coefficient = EGF coefficient / k!
    r.c_[k] = (m == Mode::OGF) ? c_[k] / f : c_[k] * f;
  }
  return r;
}

std::string SeriesZ::str() const {
  std::ostringstream out;
  for (int k = 0; k <= order_; ++k) {
    if (k) out << " ; ";
    out << "z^" << k << ": " << c_[k].str();
  }
  return out.str();
}

SeriesZ exp_linear(const MPoly& c, int order) {
  SeriesZ r(order, SeriesZ::Mode::EGF);
  MPoly p(1L);
  for (int k = 0; k <= order; ++k) {
    r[k] = p;
    p = p * c;
  }
  return r;
}

}  // namespace permcf
