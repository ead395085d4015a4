#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "permcf/bijections.hpp"

using namespace permcf;

namespace {
const ClassSpec S = parse_class("S");
}

TEST_CASE("the two worked conversions") {
  Permutation sigma = Permutation::parse("4 1 2 7 9 6 5 8 3");
  CHECK(phi(hat(sigma)).str() == "10 3 5 1 4 9 6 8 2 7");
  CHECK(psi(sigma).str() == "3 5 1 4 9 6 8 2 7");

  Permutation sigma2 = Permutation::parse("1 6 8 9 7 2 5 3 4");
  CHECK(phi(hat(sigma2)).str() == "10 2 5 6 1 3 7 4 9 8");
  CHECK(psi_tilde(sigma2).str() == "2 5 6 1 3 7 4 9 8");
}

TEST_CASE("phi is a bijection converting descents to drops") {
  for (int n = 0; n <= 6; ++n) {
    std::set<Permutation> image;
    long count = 0;
    for_each_in_class(S, n, [&](const Permutation& p) {
      image.insert(phi(p));
      ++count;
    });
    CHECK(static_cast<long>(image.size()) == count);
  }
  CHECK(phi(Permutation::identity(4)) == Permutation::identity(4));
}

TEST_CASE("linear encoder on the running example") {
  Permutation sigma = Permutation::parse("4 1 2 7 9 6 5 8 3");
  LaguerreHistory h = psi_fv(sigma);
  CHECK(h.str() == "UBRDURBD;0,0,0,1,0,1,1,0");
  CHECK(validate(h).ok);

  // S_2: the value 1 is a double ascent under 0-0
  CHECK(psi_fv(Permutation({1, 2})).str() == "B;0");
}

TEST_CASE("restricted encoders on small inputs") {
  CHECK(phi_fv(Permutation({1})).str() == "B;0");
  CHECK(phi_fz(Permutation::identity(3)).str() == "BBB;0,0,0");
  CHECK(phi_fz_variant(Permutation::identity(3)).str() == "YYY;0,0,0");

  // the identity's shifted sets force red level steps throughout
  LaguerreHistory id_yzl = psi_yzl(Permutation::identity(4));
  CHECK(id_yzl.path.str() == "RRR");
  for (int x : id_yzl.p) CHECK(x == 0);
}

TEST_CASE("encoders are bijections onto their codomains") {
  for (int m = 1; m <= 6; ++m) {
    std::set<std::string> fv, yzl;
    long count = 0;
    for_each_in_class(S, m, [&](const Permutation& p) {
      ++count;
      fv.insert(psi_fv(p).str());
      yzl.insert(psi_yzl(p).str());
    });
    long lh_count = static_cast<long>(enumerate_histories(LHVariant::Full, m - 1).size());
    CHECK(static_cast<long>(fv.size()) == count);
    CHECK(static_cast<long>(yzl.size()) == count);
    CHECK(lh_count == count);
  }
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> fv, fz, var;
    long count = 0;
    for_each_in_class(S, n, [&](const Permutation& p) {
      ++count;
      fv.insert(phi_fv(p).str());
      fz.insert(phi_fz(p).str());
      var.insert(phi_fz_variant(p).str());
    });
    CHECK(static_cast<long>(fv.size()) == count);
    CHECK(static_cast<long>(fz.size()) == count);
    CHECK(static_cast<long>(var.size()) == count);
    CHECK(static_cast<long>(enumerate_histories(LHVariant::Restricted, n).size()) == count);
    CHECK(static_cast<long>(enumerate_histories(LHVariant::VariantRestricted, n).size()) ==
          count);
  }
}

TEST_CASE("the commuting triangles") {
  for (int n = 1; n <= 6; ++n) {
    for_each_in_class(S, n, [&](const Permutation& p) {
      CHECK(phi_fv(p) == phi_fz(phi(p)));      // restricted triangle
      CHECK(psi_fv(p) == psi_yzl(psi(p)));     // full triangle
    });
  }
}

TEST_CASE("variant encoder satisfies the height identities") {
  for (int n = 1; n <= 6; ++n) {
    for_each_in_class(S, n, [&](const Permutation& p) {
      LaguerreHistory h = phi_fz_variant(p);
      CyclicStatRecord cs = cyclic_stats(p);
      NestCrosRecord nc = nest_cros(p);
      // fixed points sit exactly on the yellow steps
      std::vector<int> yellows;
      for (int i = 1; i <= n; ++i)
        if (h.path.step(i) == Step::Ly) yellows.push_back(i);
      CHECK(yellows == cs.fix);
      // excedance values sit on blue or up steps
      std::vector<int> blue_up;
      for (int i = 1; i <= n; ++i)
        if (h.path.step(i) == Step::Lb || h.path.step(i) == Step::U) blue_up.push_back(i);
      CHECK(blue_up == cs.exc_set);
      long psum = 0;
      for (int x : h.p) psum += x;
      CHECK(psum == nc.nest);
      long hsum = 0;
      for (int i = 1; i <= n; ++i) hsum += h.path.height(i - 1);
      CHECK(cs.exc() + nc.cros + nc.nest == hsum);
    });
  }
}

TEST_CASE("level color swap") {
  LaguerreHistory h = LaguerreHistory::parse("UBRDURBD;0,0,0,1,0,1,1,0", LHVariant::Full);
  CHECK(theta(h).str() == "URBDUBRD;0,0,0,1,0,1,1,0");
  for (const LaguerreHistory& g : enumerate_histories(LHVariant::Full, 5)) {
    CHECK(theta(theta(g)) == g);
    CHECK(theta(g).path.heights() == g.path.heights());
    CHECK(validate(theta(g)).ok);
  }
}

TEST_CASE("restricted maps demand the right domain") {
  CHECK_THROWS_AS(phi_tilde(Permutation({2, 3, 1})), std::domain_error);
  CHECK_THROWS_AS(psi_tilde(Permutation({2, 1, 3})), std::domain_error);
  CHECK(phi_tilde(Permutation({1, 3, 2})) == phi(Permutation({1, 3, 2})));
}

TEST_CASE("231-avoiders produce weightless restricted histories") {
  for_each_in_class(parse_class("S(231)"), 5, [](const Permutation& p) {
    LaguerreHistory h = phi_fv(p);
    for (int x : h.p) CHECK(x == 0);
  });
  for_each_in_class(parse_class("S(321)"), 5, [](const Permutation& p) {
    LaguerreHistory h = phi_fz(p);
    for (int x : h.p) CHECK(x == 0);
  });
}

TEST_CASE("name dispatch") {
  Permutation p = Permutation::parse("4 1 2 7 9 6 5 8 3");
  CHECK(apply_bijection("psi", p).str() == "3 5 1 4 9 6 8 2 7");
  CHECK(apply_bijection("psi_fv", p).str() == "UBRDURBD;0,0,0,1,0,1,1,0");
  CHECK_THROWS_WITH_AS(apply_bijection("nope", p), doctest::Contains("valid names"),
                       std::invalid_argument);
}

TEST_CASE("hat-word weights shift the way the full encoder needs") {
  for (int n = 1; n <= 6; ++n) {
    for_each_in_class(S, n, [&](const Permutation& p) {
      Permutation h = hat(p);
      VincularRecord vh = vincular_counts(h);
      VincularRecord vp = vincular_counts(p);
      LinearStatRecord lh = linear_stats(h, Boundary::ZeroInf);
      for (int i = 1; i <= n; ++i) {
        bool in_val_da =
            std::binary_search(lh.valley.begin(), lh.valley.end(), i + 1) ||
            std::binary_search(lh.da.begin(), lh.da.end(), i + 1);
        CHECK(vh.v2_31[i] == vp.v2_13[i - 1] + (in_val_da ? 1 : 0));
      }
    });
  }
}
