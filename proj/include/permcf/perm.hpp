#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace permcf {

/// Thrown when an enumeration request exceeds the configured size caps.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Caps {
  int s_max = 10;  // S_n, D_n and pattern classes
  int b_max = 7;   // signed permutations
};
Caps& global_caps();

/// A permutation of [n] in one-line notation.  Storage is 0-based; all
/// public indexing is 1-based: (*this)(i) = sigma(i) for i in [n].
class Permutation {
 public:
  Permutation() = default;
  /// From a 1-based one-line word, e.g. {3,1,2}.  Validates bijectivity.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i - 1] + 1; }  // 1-based
  const std::vector<int>& raw() const { return w_; }     // 0-based values

  bool operator==(const Permutation& o) const { return w_ == o.w_; }
  bool operator!=(const Permutation& o) const { return w_ != o.w_; }
  bool operator<(const Permutation& o) const { return w_ < o.w_; }

  std::string str() const;                        // "3 1 2"
  static Permutation parse(const std::string&);   // inverse of str()

 private:
  std::vector<int> w_;
};

/// sigma in B_n: stores sigma(1..n) as signed values with distinct
/// absolute values; sigma(-i) = -sigma(i) is implicit.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> one_line);

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return i > 0 ? w_[i - 1] : -w_[-i - 1]; }

  bool operator==(const SignedPermutation& o) const { return w_ == o.w_; }
  bool operator<(const SignedPermutation& o) const { return w_ < o.w_; }

  std::string str() const;

 private:
  std::vector<int> w_;
};

/// The star companion: a bijection of {0,...,n} with 0 -> n, i -> sigma(i)-1.
class StarMap {
 public:
  StarMap() = default;
  explicit StarMap(std::vector<int> images);  // images[i] for i = 0..n

  int size() const { return static_cast<int>(m_.size()) - 1; }  // n
  int operator()(int i) const { return m_[i]; }                 // i in 0..n
  int preimage(int v) const { return inv_[v]; }

  int cycle_count() const;
  std::string str() const;

 private:
  std::vector<int> m_;
  std::vector<int> inv_;
};

/// Standard cycle form: each cycle led by its largest element, cycles
/// ordered by increasing leader.
struct CycleForm {
  std::vector<std::vector<int>> cycles;
  std::string str() const;  // "(6 5 1 2)(8 3 4 7)"
};

Permutation inverse(const Permutation& p);

enum class Conjugation { R, C, RC, RCR };
Conjugation conjugation_from_name(const std::string& name);  // "r","c","rc","rcr"
Permutation conjugate(const Permutation& p, Conjugation kind);

/// sigma-hat: values +1 with 1 appended; a permutation of [n+1].
Permutation hat(const Permutation& p);

StarMap star(const Permutation& p);

CycleForm stan(const Permutation& p);

/// Cycle word: concatenation of stan's cycles.  Requires a derangement
/// unless allow_fixed_points is set.
Permutation iota(const Permutation& p, bool allow_fixed_points = false);

/// Inverse of iota on its image: cycles are cut at left-to-right maxima.
Permutation iota_inverse(const Permutation& word);

bool is_derangement(const Permutation& p);

/// Classical avoidance of a length-3 pattern.
bool avoids(const Permutation& p, const Permutation& tau);

enum class PermClass { S, D, S_avoiding, D_avoiding, B };

struct ClassSpec {
  PermClass cls = PermClass::S;
  Permutation tau;  // for the avoidance classes
  std::string str() const;
};
/// Parses "S", "D", "B", "S(231)", "D(321)".
ClassSpec parse_class(const std::string& text);

/// Visit every class member exactly once, in lexicographic order.
/// Throws ResourceError above the configured cap.
void for_each_in_class(const ClassSpec& cls, int n,
                       const std::function<void(const Permutation&)>& fn);
void for_each_signed(int n, const std::function<void(const SignedPermutation&)>& fn);

std::vector<Permutation> collect_class(const ClassSpec& cls, int n);

}  // namespace permcf
