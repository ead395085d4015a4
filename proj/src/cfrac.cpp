#include "permcf/cfrac.hpp"

#include <sstream>

namespace permcf {

SeriesZ jfraction_expand(std::function<MPoly(int)> b, std::function<MPoly(int)> lam,
                         int order) {
  // g_k = 1/(1 - b_k z - lam_{k+1} z^2 g_{k+1}); levels beyond order/2 cannot
  // reach z^order, so start the recursion there with g = 1.
  int depth = order / 2 + 1;
  SeriesZ g = SeriesZ::one(order);
  for (int k = depth; k >= 0; --k) {
    SeriesZ den = SeriesZ::one(order);
    SeriesZ bz(order);
    if (order >= 1) bz[1] = b(k);
    den = den - bz;
    if (order >= 2) {
      SeriesZ tail = g.shift_up(2);
      SeriesZ lam2(order);
      lam2[0] = lam(k + 1);
      den = den - lam2 * tail;
    }
    g = den.inverse();
  }
  return g;
}

SeriesZ sfraction_expand(std::function<MPoly(int)> alpha, int order) {
  // g_k = 1/(1 - alpha_k z g_{k+1}); alpha_k first contributes at z^k.
  SeriesZ g = SeriesZ::one(order);
  for (int k = order + 1; k >= 1; --k) {
    SeriesZ az(order);
    if (order >= 1) az[1] = alpha(k);
    SeriesZ den = SeriesZ::one(order) - az * g;
    g = den.inverse();
  }
  return g;
}

SeriesZ cf_expand(const CFSpec& spec, int order) {
  if (spec.kind == CFSpec::Kind::J) return jfraction_expand(spec.b, spec.coeff, order);
  return sfraction_expand(spec.coeff, order);
}

Contraction contract(std::function<MPoly(int)> alpha) {
  Contraction c;
  c.alpha1 = alpha(1);
  c.first.kind = CFSpec::Kind::J;
  c.first.b = [alpha](int n) {
    return n == 0 ? alpha(1) : alpha(2 * n) + alpha(2 * n + 1);
  };
  c.first.coeff = [alpha](int n) { return alpha(2 * n - 1) * alpha(2 * n); };
  c.second_inner.kind = CFSpec::Kind::J;
  c.second_inner.b = [alpha](int n) { return alpha(2 * n + 1) + alpha(2 * n + 2); };
  c.second_inner.coeff = [alpha](int n) { return alpha(2 * n) * alpha(2 * n + 1); };
  return c;
}

SeriesZ expand_contraction_second(const Contraction& c, int order) {
  SeriesZ inner = cf_expand(c.second_inner, order);
  SeriesZ scaled(order);
  for (int k = 1; k <= order; ++k) scaled[k] = inner[k - 1] * c.alpha1;
  scaled[0] = MPoly(1L);
  return scaled;
}

namespace {

MPoly c_int(long v) { return MPoly(v); }
MPoly t() { return MPoly::var('t'); }
MPoly q() { return MPoly::var('q'); }
MPoly y() { return MPoly::var('y'); }
MPoly u() { return MPoly::var('u'); }
MPoly v() { return MPoly::var('v'); }
MPoly w() { return MPoly::var('w'); }
MPoly r() { return MPoly::var('r'); }

}  // namespace

CFSpec named_cf_spec(const std::string& name) {
  CFSpec s;
  if (name == "eulerian-s") {
    // alpha: 1, t, 2, 2t, 3, 3t, ...
    s.kind = CFSpec::Kind::S;
    s.coeff = [](int n) {
      long k = (n + 1) / 2;
      return (n % 2 == 1) ? c_int(k) : c_int(k) * t();
    };
    return s;
  }
  if (name == "eulerian-j-shifted") {
    // sum A_{n+1}(t) z^n : b_n = (n+1)(1+t), lam_n = n(n+1) t
    s.kind = CFSpec::Kind::J;
    s.b = [](int n) { return c_int(n + 1) * (c_int(1) + t()); };
    s.coeff = [](int n) { return c_int(1L * n * (n + 1)) * t(); };
    return s;
  }
  if (name == "eulerian-j") {
    // sum A_n(t) z^n : b_n = (n+1) + n t, lam_n = n^2 t
    s.kind = CFSpec::Kind::J;
    s.b = [](int n) { return c_int(n + 1) + c_int(n) * t(); };
    s.coeff = [](int n) { return c_int(1L * n * n) * t(); };
    return s;
  }
  if (name == "narayana-s") {
    s.kind = CFSpec::Kind::S;
    s.coeff = [](int n) { return (n % 2 == 1) ? c_int(1) : t(); };
    return s;
  }
  if (name == "narayana-j-shifted") {
    // sum N_{n+1}(t) z^n : b_n = 1+t, lam_n = t
    s.kind = CFSpec::Kind::J;
    s.b = [](int) { return c_int(1) + t(); };
    s.coeff = [](int) { return t(); };
    return s;
  }
  if (name == "narayana-j") {
    // sum N_n(t) z^n : b_0 = 1, b_n = 1+t, lam_n = t
    s.kind = CFSpec::Kind::J;
    s.b = [](int n) { return n == 0 ? c_int(1) : c_int(1) + t(); };
    s.coeff = [](int) { return t(); };
    return s;
  }
  if (name == "narayana-tqr-j") {
    // sum N_n(t,q,r) z^n : b_0 = r, b_n = (1+t) q^n, lam_n = t q^{2n-1}
    s.kind = CFSpec::Kind::J;
    s.b = [](int n) { return n == 0 ? r() : (c_int(1) + t()) * MPoly::var('q', n); };
    s.coeff = [](int n) { return t() * MPoly::var('q', 2 * n - 1); };
    return s;
  }
  if (name == "typeb-j") {
    // sum_n (sum_{B_n} y^neg t^excB) z^n
    s.kind = CFSpec::Kind::J;
    s.b = [](int n) {
      return c_int(n + 1) * (c_int(1) + y() * t()) + c_int(n) * (t() + y());
    };
    s.coeff = [](int n) {
      return c_int(1L * n * n) * (c_int(1) + y()).pow(2) * t();
    };
    return s;
  }
  if (name == "perm-linear-j") {
    // sum A_{n+1}(p,q,t,u,v,w) z^n : b_n = (u+tv)[n+1], lam_n = t w [n][n+1]
    s.kind = CFSpec::Kind::J;
    s.b = [](int n) { return (u() + t() * v()) * pq_integer(n + 1); };
    s.coeff = [](int n) {
      return t() * w() * pq_integer(n) * pq_integer(n + 1);
    };
    return s;
  }
  if (name == "perm-cyclic-j") {
    // 1 + sum B_n(p,q,t,u,v,w,y) z^n : b_n = y p^n + (qu+tv)[n], lam_n = t w [n]^2
    s.kind = CFSpec::Kind::J;
    s.b = [](int n) {
      return y() * MPoly::var('p', n) + (q() * u() + t() * v()) * pq_integer(n);
    };
    s.coeff = [](int n) { return t() * w() * pq_integer(n).pow(2); };
    return s;
  }
  if (name == "star-cyclic-j") {
    // sum C_{n+1}(q,t,u,v,w) z^n : b_n = (n+1)(tu+v), lam_n = n(q+n) t w
    s.kind = CFSpec::Kind::J;
    s.b = [](int n) { return c_int(n + 1) * (t() * u() + v()); };
    s.coeff = [](int n) { return c_int(n) * (q() + c_int(n)) * t() * w(); };
    return s;
  }
  if (name == "derangement-j") {
    // 1 + sum D_n(q,t,u,v,w) z^n : b_n = n(tu+v), lam_n = n(q+n-1) t w
    s.kind = CFSpec::Kind::J;
    s.b = [](int n) { return c_int(n) * (t() * u() + v()); };
    s.coeff = [](int n) { return c_int(n) * (q() + c_int(n - 1)) * t() * w(); };
    return s;
  }
  if (name == "avoid321-inv-j") {
    // sum (sum_{cda=0, 321-avoiding} q^inv t^exc) z^n : b_n = q^n, lam_n = t q^{2n-1}
    s.kind = CFSpec::Kind::J;
    s.b = [](int n) { return MPoly::var('q', n); };
    s.coeff = [](int n) { return t() * MPoly::var('q', 2 * n - 1); };
    return s;
  }
  std::ostringstream err;
  err << "unknown cf spec '" << name << "'; valid names:";
  for (const auto& nm : named_cf_spec_names()) err << " " << nm;
  throw std::invalid_argument(err.str());
}

std::vector<std::string> named_cf_spec_names() {
  return {"eulerian-s",      "eulerian-j-shifted", "eulerian-j",
          "narayana-s",      "narayana-j-shifted", "narayana-j",
          "narayana-tqr-j",  "typeb-j",            "perm-linear-j",
          "perm-cyclic-j",   "star-cyclic-j",      "derangement-j",
          "avoid321-inv-j"};
}

}  // namespace permcf
