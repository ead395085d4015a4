#pragma once

#include "permcf/paths.hpp"
#include "permcf/perm.hpp"
#include "permcf/statistics.hpp"

namespace permcf {

/// The descent-to-excedance bijection built from the biword of descent
/// bottoms/tops: letters of the top words are placed so the inversion
/// bottom (resp. top) number of letter x equals (2-31)_x.
Permutation phi(const Permutation& p);

/// Phi(sigma-hat) with the leading n+1 removed.
Permutation psi(const Permutation& p);

/// Linear encoder into full Laguerre histories: sigma in S_{n+1} -> LH_n,
/// steps by the 0-0 class of value i, weights (2-13)_i.
LaguerreHistory psi_fv(const Permutation& p);

/// Restricted linear encoder: sigma in S_n -> LH*_n, 0-inf classes,
/// weights (2-31)_i.
LaguerreHistory phi_fv(const Permutation& p);

/// Cyclic encoder: sigma in S_n -> LH*_n, cyclic classes, weights nest_i.
LaguerreHistory phi_fz(const Permutation& p);

/// Shifted-set encoder: sigma in S_{n+1} -> LH_n, weights nest_i.
LaguerreHistory psi_yzl(const Permutation& p);

/// Variant cyclic encoder: sigma in S_n -> LH'_n with fixed points on
/// yellow level steps, weights nest_i.
LaguerreHistory phi_fz_variant(const Permutation& p);

/// Swap blue and red level steps; weights unchanged.  An involution on
/// full histories (and on bare 2-Motzkin words).
LaguerreHistory theta(const LaguerreHistory& h);
MotzkinWord theta(const MotzkinWord& w);

/// Restriction of phi to 231-avoiders; lands in 321-avoiders.
/// Throws std::domain_error when the input contains the pattern.
Permutation phi_tilde(const Permutation& p);

/// Restriction of psi to 213-avoiders; lands in 321-avoiders.
Permutation psi_tilde(const Permutation& p);

/// Dispatch by the CLI names: phi, psi, psi_fv, phi_fv, phi_fz, psi_yzl,
/// phi_fz_var, phi_tilde, psi_tilde.  Result is a permutation or a history.
struct BijectionResult {
  bool is_history = false;
  Permutation perm;
  LaguerreHistory history;
  std::string str() const { return is_history ? history.str() : perm.str(); }
};
BijectionResult apply_bijection(const std::string& name, const Permutation& p);
std::vector<std::string> bijection_names();

}  // namespace permcf
