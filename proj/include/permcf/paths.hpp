#pragma once

#include <functional>
#include <string>
#include <vector>

#include "permcf/perm.hpp"

namespace permcf {

enum class Step : char { U, D, Lb, Lr, Ly };

char step_char(Step s);        // U, D, B, R, Y
Step step_from_char(char c);

/// A 2- or 3-Motzkin word with eagerly stored heights h_0..h_n.
/// Construction rejects words that dip below the axis or end off it.
class MotzkinWord {
 public:
  MotzkinWord() : h_{0} {}
  explicit MotzkinWord(std::vector<Step> steps);

  int length() const { return static_cast<int>(steps_.size()); }
  Step step(int i) const { return steps_.at(i - 1); }  // 1-based
  const std::vector<Step>& steps() const { return steps_; }
  int height(int i) const { return h_.at(i); }  // h_0..h_n
  const std::vector<int>& heights() const { return h_; }

  bool uses_yellow() const;
  int count(Step s) const;

  bool operator==(const MotzkinWord& o) const { return steps_ == o.steps_; }
  bool operator<(const MotzkinWord& o) const { return steps_ < o.steps_; }

  std::string str() const;  // e.g. "UBRDURBD"
  static MotzkinWord parse(const std::string&);

 private:
  std::vector<Step> steps_;
  std::vector<int> h_;
};

enum class LHVariant { Full, Restricted, VariantRestricted };

/// A Motzkin path with height-bounded weights; the weight bounds depend
/// on the variant (see validate()).
struct LaguerreHistory {
  LHVariant variant = LHVariant::Full;
  MotzkinWord path;
  std::vector<int> p;

  int length() const { return path.length(); }
  bool operator==(const LaguerreHistory& o) const {
    return variant == o.variant && path == o.path && p == o.p;
  }
  bool operator<(const LaguerreHistory& o) const {
    if (!(path == o.path)) return path < o.path;
    return p < o.p;
  }

  std::string str() const;  // "UBRDURBD;0,0,0,1,0,1,1,0"
  static LaguerreHistory parse(const std::string&, LHVariant variant);
};

struct LHValidation {
  bool ok = true;
  int index = 0;        // first violating step (1-based) when !ok
  std::string what;
};

/// Checks the weight vector against the variant's height bounds:
///   full:               0 <= p_i <= h_{i-1}
///   restricted:         additionally p_i <= h_{i-1}-1 when s_i is Lr or D
///   variant-restricted: 3-Motzkin; p_i <= h_{i-1} (U), <= h_{i-1}-1 (D, Lb, Lr),
///                       = h_{i-1} (Ly)
LHValidation validate(const LaguerreHistory& h);

enum class PathKind { TwoMotzkin, TwoMotzkinStar };

/// All 2-Motzkin words of length n (star: no Lr step at height 0),
/// in a fixed deterministic order.
std::vector<MotzkinWord> enumerate_paths(PathKind kind, int n);

/// All histories of the given variant and length, deterministic order.
std::vector<LaguerreHistory> enumerate_histories(LHVariant variant, int n);

}  // namespace permcf
