#include "permcf/actions.hpp"

#include <algorithm>
#include <stdexcept>

#include "permcf/statistics.hpp"

namespace permcf {

XFactorization x_factorization(const Permutation& p, int x) {
  int n = p.size();
  if (x < 1 || x > n) throw std::invalid_argument("x out of range");
  XFactorization f;
  int pos = inverse(p)(x);
  f.pos = pos;
  f.w2_begin = pos;
  while (f.w2_begin > 1 && p(f.w2_begin - 1) < x) --f.w2_begin;
  f.w3_end = pos;
  while (f.w3_end < n && p(f.w3_end + 1) < x) ++f.w3_end;
  return f;
}

Permutation fs_toggle(const Permutation& p, int x) {
  XFactorization f = x_factorization(p, x);
  if (!f.has_w2() && !f.has_w3()) return p;
  std::vector<int> w;
  w.reserve(p.size());
  for (int i = 1; i < f.w2_begin; ++i) w.push_back(p(i));          // w1
  for (int i = f.pos + 1; i <= f.w3_end; ++i) w.push_back(p(i));   // w3
  w.push_back(x);
  for (int i = f.w2_begin; i < f.pos; ++i) w.push_back(p(i));      // w2
  for (int i = f.w3_end + 1; i <= p.size(); ++i) w.push_back(p(i));  // w4
  return Permutation(w);
}

Permutation mfs_toggle(const Permutation& p, int x) {
  XFactorization f = x_factorization(p, x);
  if (f.is_word_peak()) return p;
  return fs_toggle(p, x);
}

namespace {

// Peak under the 0-inf boundary: a smaller (or absent) left neighbour and a
// smaller in-word right neighbour.  On cycle words this keeps every cycle
// leader in place, which the plain word-only rule would not.
bool lpk_zero_inf(const Permutation& p, int x) {
  XFactorization f = x_factorization(p, x);
  return f.has_w3() && (f.has_w2() || f.pos == 1);
}

}  // namespace

Permutation cmfs_toggle(const Permutation& d, int x) {
  Permutation word = iota(d);
  if (lpk_zero_inf(word, x)) return d;
  Permutation moved = fs_toggle(word, x);
  Permutation out = iota_inverse(moved);
  if (iota(out, true) != moved)
    throw std::logic_error("cmfs toggle left the image of the cycle word map");
  return out;
}

LaguerreHistory lh_theta_toggle(const LaguerreHistory& h, int i) {
  if (i < 1 || i > h.length()) throw std::invalid_argument("index out of range");
  Step s = h.path.step(i);
  if (s != Step::Lb && s != Step::Lr) return h;
  LaguerreHistory out = h;
  std::vector<Step> steps = h.path.steps();
  steps[i - 1] = (s == Step::Lb) ? Step::Lr : Step::Lb;
  out.path = MotzkinWord(std::move(steps));
  return out;
}

namespace {

// A value is in descent role when its left run is empty and its right run
// is not; the canonical orbit member has none.
bool dd_role(const Permutation& p, int x) {
  XFactorization f = x_factorization(p, x);
  return !f.has_w2() && f.has_w3();
}

template <typename T, typename Pred>
void pick_canonical(Orbit<T>& orb, Pred is_canonical, const char* what) {
  int found = 0;
  for (const T& m : orb.members) {
    if (is_canonical(m)) {
      orb.canonical = m;
      ++found;
    }
  }
  if (found != 1)
    throw std::logic_error(std::string("orbit has ") + std::to_string(found) +
                           " canonical members (" + what + ")");
}

}  // namespace

Orbit<Permutation> mfs_orbit(const Permutation& p) {
  Orbit<Permutation> orb =
      orbit_of(p, p.size(), [](const Permutation& q, int x) { return mfs_toggle(q, x); });
  pick_canonical(
      orb,
      [](const Permutation& q) {
        for (int x = 1; x <= q.size(); ++x)
          if (dd_role(q, x)) return false;
        return true;
      },
      "no descent-role value");
  return orb;
}

Orbit<Permutation> cmfs_orbit(const Permutation& d) {
  if (!is_derangement(d)) throw std::domain_error("cmfs acts on derangements");
  Orbit<Permutation> orb =
      orbit_of(d, d.size(), [](const Permutation& q, int x) { return cmfs_toggle(q, x); });
  pick_canonical(
      orb,
      [](const Permutation& q) { return cyclic_stats(q).cda_count() == 0; },
      "no double excedance");
  return orb;
}

Orbit<LaguerreHistory> lh_orbit(const LaguerreHistory& h) {
  Orbit<LaguerreHistory> orb = orbit_of(
      h, h.length(),
      [](const LaguerreHistory& g, int i) { return lh_theta_toggle(g, i); });
  pick_canonical(
      orb,
      [](const LaguerreHistory& g) { return g.path.count(Step::Lb) == 0; },
      "no blue level step");
  return orb;
}

namespace {

template <typename T, typename OrbitFn>
std::vector<Orbit<T>> partition(const std::vector<T>& cls, OrbitFn orbit_fn) {
  std::set<T> visited;
  std::vector<Orbit<T>> out;
  for (const T& el : cls) {
    if (visited.count(el)) continue;
    Orbit<T> orb = orbit_fn(el);
    for (const T& m : orb.members) visited.insert(m);
    out.push_back(std::move(orb));
  }
  return out;
}

}  // namespace

std::vector<Orbit<Permutation>> mfs_orbits(const std::vector<Permutation>& cls) {
  return partition(cls, mfs_orbit);
}

std::vector<Orbit<Permutation>> cmfs_orbits(const std::vector<Permutation>& cls) {
  return partition(cls, cmfs_orbit);
}

std::vector<Orbit<LaguerreHistory>> lh_orbits(const std::vector<LaguerreHistory>& cls) {
  return partition(cls, lh_orbit);
}

}  // namespace permcf
