#pragma once

#include <set>
#include <vector>

#include "permcf/paths.hpp"
#include "permcf/perm.hpp"

namespace permcf {

/// The x-factorization w1 w2 x w3 w4: w2 (resp. w3) is the maximal run of
/// letters smaller than x immediately left (resp. right) of x.
struct XFactorization {
  int pos = 0;          // 1-based position of x
  int w2_begin = 0;     // [w2_begin, pos) — empty when w2_begin == pos
  int w3_end = 0;       // (pos, w3_end] — empty when w3_end == pos
  bool has_w2() const { return w2_begin < pos; }
  bool has_w3() const { return w3_end > pos; }
  bool is_word_peak() const { return has_w2() && has_w3(); }
};

XFactorization x_factorization(const Permutation& p, int x);

/// Swap w2 and w3 around x.  Involution; identity when both runs are empty.
Permutation fs_toggle(const Permutation& p, int x);

/// Fix x when it is a peak of the word (both runs nonempty), hop otherwise.
Permutation mfs_toggle(const Permutation& p, int x);

/// Cyclic transplant: act on the standard cycle word and fold back.
/// Requires a derangement.
Permutation cmfs_toggle(const Permutation& d, int x);

/// Swap a blue/red level step in a variant-restricted history; yellow
/// steps, weights and heights are untouched.
LaguerreHistory lh_theta_toggle(const LaguerreHistory& h, int i);

template <typename T>
struct Orbit {
  std::vector<T> members;   // sorted
  T canonical;
  int size() const { return static_cast<int>(members.size()); }
};

/// BFS closure of `start` under toggles at 1..n.
template <typename T, typename ToggleFn>
Orbit<T> orbit_of(const T& start, int n, ToggleFn toggle) {
  std::set<T> seen{start};
  std::vector<T> frontier{start};
  while (!frontier.empty()) {
    std::vector<T> next;
    for (const T& cur : frontier) {
      for (int x = 1; x <= n; ++x) {
        T img = toggle(cur, x);
        if (seen.insert(img).second) next.push_back(img);
      }
    }
    frontier = std::move(next);
  }
  Orbit<T> orb;
  orb.members.assign(seen.begin(), seen.end());
  return orb;
}

/// Orbits with their canonical member: the unique element with no
/// double descent run (MFS), no double excedance (CMFS), or no blue level
/// step (history action).  Throws std::logic_error if not unique.
Orbit<Permutation> mfs_orbit(const Permutation& p);
Orbit<Permutation> cmfs_orbit(const Permutation& d);
Orbit<LaguerreHistory> lh_orbit(const LaguerreHistory& h);

/// Partition a fully enumerated class into orbits (deterministic order:
/// by smallest member).
std::vector<Orbit<Permutation>> mfs_orbits(const std::vector<Permutation>& cls);
std::vector<Orbit<Permutation>> cmfs_orbits(const std::vector<Permutation>& cls);
std::vector<Orbit<LaguerreHistory>> lh_orbits(const std::vector<LaguerreHistory>& cls);

}  // namespace permcf
