#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "permcf/cfrac.hpp"
#include "permcf/identity.hpp"
#include "permcf/mpoly.hpp"
#include "permcf/series.hpp"
#include "permcf/statistics.hpp"

#include "oracles.hpp"

using namespace permcf;

TEST_CASE("polynomial arithmetic and canonical text") {
  MPoly t = MPoly::var('t');
  MPoly p = (MPoly(1L) + t) * (MPoly(1L) + t);
  CHECK(p.str() == "1+2*t+t^2");
  CHECK(p.degree('t') == 2);
  CHECK((p - p).is_zero());
  CHECK(MPoly::parse("1+2*t+t^2") == p);
  CHECK(MPoly::parse("t^2 + 2*t + 1") == p);
  CHECK(MPoly::parse("-2*q*t^3").str() == "-2*q*t^3");
  CHECK(MPoly::parse("1-2*t") == MPoly(1L) - MPoly(2L) * t);
  CHECK(MPoly::parse("1/2*t").str() == "1/2*t");
  CHECK_THROWS_AS(MPoly::parse("1+"), std::invalid_argument);
  CHECK_THROWS_AS(MPoly::var('z'), std::invalid_argument);

  Point at{};
  at[var_index('t')] = Rat(3);
  CHECK(p.eval(at) == Rat(16));
}

TEST_CASE("palindromic test and coefficient extraction") {
  MPoly p = MPoly::parse("1+4*t+t^2");
  CHECK(p.is_palindromic('t', 2));
  CHECK_FALSE(MPoly::parse("1+4*t").is_palindromic('t', 2));
  CHECK(p.coeff_of('t', 1).constant_term() == Rat(4));
}

TEST_CASE("gamma basis expansion") {
  // 1+4t+t^2 = (1+t)^2 + 2t
  GammaExpansion g = gamma_expand(MPoly::parse("1+4*t+t^2"), 2);
  REQUIRE(g.ok);
  CHECK(g.gamma == std::vector<Rat>{Rat(1), Rat(2)});

  // Narayana N_3
  g = gamma_expand(MPoly::parse("1+3*t+t^2"), 2);
  REQUIRE(g.ok);
  CHECK(g.gamma == std::vector<Rat>{Rat(1), Rat(1)});

  // expansion exists but is not nonnegative
  g = gamma_expand(MPoly::parse("1+t^2"), 2);
  REQUIRE(g.ok);
  CHECK(g.gamma == std::vector<Rat>{Rat(1), Rat(-2)});

  // non-palindromic input is rejected with the residual
  g = gamma_expand(MPoly::parse("1+t"), 2);
  CHECK_FALSE(g.ok);
  CHECK_FALSE(g.residual.is_zero());
}

TEST_CASE("pq-integer polynomials") {
  CHECK(pq_integer(0).is_zero());
  CHECK(pq_integer(1) == MPoly(1L));
  CHECK(pq_integer(2) == MPoly::var('p') + MPoly::var('q'));
  CHECK(pq_integer(3).num_terms() == 3);
}

TEST_CASE("series arithmetic") {
  SeriesZ one = SeriesZ::one(4);
  SeriesZ geom(4);
  geom[0] = MPoly(1L);
  geom[1] = MPoly(-1L);
  SeriesZ inv = geom.inverse();  // 1/(1-z) = 1+z+z^2+...
  for (int k = 0; k <= 4; ++k) CHECK(inv[k] == MPoly(1L));
  CHECK((inv * geom) == one);

  // EGF: e^z * e^z has coefficients 2^n
  SeriesZ e1 = exp_linear(MPoly(1L), 4);
  SeriesZ prod = e1 * e1;
  for (int k = 0; k <= 4; ++k) CHECK(prod[k] == MPoly(1L << k));

  // scaling the argument of an EGF multiplies coefficient n by c^n
  SeriesZ scaled = e1.scale_argument(MPoly::var('y'));
  CHECK(scaled[3] == MPoly::var('y', 3));

  CHECK(exp_linear(MPoly(), 3)[0] == MPoly(1L));
  CHECK(exp_linear(MPoly(), 3)[1].is_zero());
}

TEST_CASE("eulerian polynomials from both fraction shapes") {
  // oracle: descent polynomials by direct enumeration
  std::vector<MPoly> an(7);
  for (int n = 0; n <= 6; ++n) {
    MPoly total;
    for_each_in_class(parse_class("S"), n, [&](const Permutation& p) {
      total += MPoly::var('t', static_cast<int>(oracle::naive_des(p)));
    });
    an[n] = total;
  }
  CHECK(an[3].str() == "1+4*t+t^2");

  SeriesZ s = cf_expand(named_cf_spec("eulerian-s"), 6);
  SeriesZ j = cf_expand(named_cf_spec("eulerian-j"), 6);
  SeriesZ jshift = cf_expand(named_cf_spec("eulerian-j-shifted"), 5);
  for (int n = 0; n <= 6; ++n) {
    CHECK(s[n] == an[n]);
    CHECK(j[n] == an[n]);
    if (n <= 5) CHECK(jshift[n] == an[n + 1]);
  }

  SeriesZ zero_j = jfraction_expand([](int) { return MPoly(); },
                                    [](int) { return MPoly(); }, 5);
  CHECK(zero_j == SeriesZ::one(5));
  SeriesZ zero_s = sfraction_expand([](int) { return MPoly(); }, 5);
  CHECK(zero_s == SeriesZ::one(5));
}

TEST_CASE("narayana fraction hits the catalan numbers at t=1") {
  SeriesZ s = cf_expand(named_cf_spec("narayana-s"), 8);
  Point at{};
  at[var_index('t')] = Rat(1);
  const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 0; n <= 8; ++n) CHECK(s[n].eval(at) == Rat(catalan[n]));
  CHECK(s[4].str() == "1+6*t+6*t^2+t^3");
}

TEST_CASE("contraction formulae against direct expansion") {
  auto alpha = [](int k) {  // 1, t, 2, 2t, 3, 3t, ...
    long v = (k + 1) / 2;
    return (k % 2 == 1) ? MPoly(v) : MPoly(v) * MPoly::var('t');
  };
  SeriesZ direct = sfraction_expand(alpha, 8);
  Contraction c = contract(alpha);
  CHECK(cf_expand(c.first, 8) == direct);
  CHECK(expand_contraction_second(c, 8) == direct);
  // the all-zero sequence contracts to 1
  auto zero = [](int) { return MPoly(); };
  Contraction cz = contract(zero);
  CHECK(cf_expand(cz.first, 5) == SeriesZ::one(5));
  CHECK(expand_contraction_second(cz, 5) == SeriesZ::one(5));
}

TEST_CASE("type-b fraction starts with the two-element hyperoctahedral group") {
  SeriesZ j = cf_expand(named_cf_spec("typeb-j"), 2);
  // z^1: identity contributes 1, the sign flip contributes y*t
  CHECK(j[1] == MPoly::parse("1+t*y"));
}

TEST_CASE("grid identity checker") {
  MPoly p = MPoly::parse("1+4*t+t^2");
  Evaluator same = [p](const Point& at) { return p.eval(at); };
  GridResult g = grid_identity_check(same, same, {{'t', 2}});
  CHECK(g.pass);
  CHECK(g.points == 3);

  Evaluator perturbed = [p](const Point& at) { return p.eval(at) + 1; };
  g = grid_identity_check(same, perturbed, {{'t', 2}});
  CHECK_FALSE(g.pass);
  CHECK_FALSE(g.witness.empty());

  // poles are skipped and replaced
  Evaluator poley = [p](const Point& at) {
    if (at[var_index('t')] == Rat(2)) throw PoleError("synthetic pole");
    return p.eval(at);
  };
  g = grid_identity_check(poley, poley, {{'t', 2}});
  CHECK(g.pass);
  CHECK(g.replaced > 0);
}

TEST_CASE("float spot checker") {
  DEvaluator lhs = [](const DPoint& at) { return at[var_index('t')] * 2.0; };
  DEvaluator rhs = [](const DPoint& at) { return at[var_index('t')] + at[var_index('t')]; };
  std::vector<DPoint> pts(3);
  pts[0][var_index('t')] = 0.25;
  pts[1][var_index('t')] = 0.5;
  pts[2][var_index('t')] = 1.5;
  SpotResult s = float_spot_check(lhs, rhs, pts, 1e-12);
  CHECK(s.pass);
  CHECK(s.used == 3);

  DEvaluator bad = [](const DPoint& at) { return at[var_index('t')] * 2.0 + 1e-6; };
  s = float_spot_check(lhs, bad, pts, 1e-9);
  CHECK_FALSE(s.pass);

  DEvaluator fussy = [](const DPoint& at) {
    if (at[var_index('t')] < 1.0) throw DomainError("too small");
    return at[var_index('t')] * 2.0;
  };
  s = float_spot_check(fussy, fussy, pts, 1e-9);
  CHECK(s.pass);
  CHECK(s.rejected == 2);
}

TEST_CASE("series coefficients stay exact under egf conversions") {
  SeriesZ egf(5, SeriesZ::Mode::EGF);
  for (int k = 0; k <= 5; ++k) egf[k] = MPoly(1L);
  SeriesZ ogf = egf.to_mode(SeriesZ::Mode::OGF);
  CHECK(ogf[5] == MPoly(Rat(1) / Rat(120)));
  CHECK(ogf.to_mode(SeriesZ::Mode::EGF) == egf);
}
