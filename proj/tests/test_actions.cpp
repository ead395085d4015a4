#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "permcf/actions.hpp"
#include "permcf/statistics.hpp"

using namespace permcf;

namespace {
const ClassSpec S = parse_class("S");
const ClassSpec D = parse_class("D");
}

TEST_CASE("value hop on the worked example") {
  Permutation sigma = Permutation::parse("2 6 4 7 1 5 8 3");
  CHECK(fs_toggle(sigma, 5).str() == "2 6 4 7 5 1 8 3");
  XFactorization f = x_factorization(sigma, 5);
  CHECK(f.pos == 6);
  CHECK(f.has_w2());
  CHECK_FALSE(f.has_w3());
}

TEST_CASE("hops are commuting involutions") {
  for_each_in_class(S, 5, [](const Permutation& p) {
    for (int x = 1; x <= 5; ++x) {
      CHECK(fs_toggle(fs_toggle(p, x), x) == p);
      CHECK(mfs_toggle(mfs_toggle(p, x), x) == p);
      for (int y = x + 1; y <= 5; ++y)
        CHECK(mfs_toggle(mfs_toggle(p, x), y) == mfs_toggle(mfs_toggle(p, y), x));
    }
  });
}

TEST_CASE("valleys and boundary-stuck values cannot hop") {
  // 1 3 2: every value is fixed by the modified hop
  Permutation p({1, 3, 2});
  for (int x = 1; x <= 3; ++x) CHECK(mfs_toggle(p, x) == p);
  CHECK(mfs_orbit(p).size() == 1);
}

TEST_CASE("orbit sizes count the hoppable values") {
  for_each_in_class(S, 4, [](const Permutation& p) {
    int hoppable = 0;
    for (int x = 1; x <= 4; ++x) {
      XFactorization f = x_factorization(p, x);
      if (f.has_w2() != f.has_w3()) ++hoppable;  // exactly one side nonempty
    }
    CHECK(mfs_orbit(p).size() == (1 << hoppable));
  });
}

TEST_CASE("orbit canonicals have no double descent") {
  for (int n = 1; n <= 6; ++n) {
    auto orbits = mfs_orbits(collect_class(S, n));
    long total = 0;
    for (const auto& orb : orbits) {
      total += orb.size();
      LinearStatRecord li = linear_stats(orb.canonical, Boundary::ZeroInf);
      CHECK(li.dd_count() == 0);
      // descents of the canonical member = its interior peaks
      int des = linear_stats(orb.canonical, Boundary::ZeroZero).des;
      CHECK(orb.size() == (1 << (n - 1 - 2 * des)));
    }
    long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(total == fact);
  }
}

TEST_CASE("gamma from small orbits") {
  // A_3: one orbit with canonical descent 0, two singletons with descent 1
  auto orbits = mfs_orbits(collect_class(S, 3));
  std::map<int, int> orbit_counts;
  for (const auto& orb : orbits)
    orbit_counts[linear_stats(orb.canonical, Boundary::ZeroZero).des]++;
  CHECK(orbit_counts[0] == 1);
  CHECK(orbit_counts[1] == 2);
  // 1 + 4t + t^2 = (1/4)*4*(1+t)^2 + 2t: interior-peak gammas 4 and 2
  std::map<int, long> gamma;
  for (const auto& orb : orbits)
    gamma[linear_stats(orb.canonical, Boundary::ZeroZero).des] += orb.size();
  CHECK(gamma[0] == 4);
  CHECK(gamma[1] == 2);
}

TEST_CASE("cyclic transplant") {
  for_each_in_class(D, 5, [](const Permutation& d) {
    for (int x = 1; x <= 5; ++x) {
      Permutation image = cmfs_toggle(d, x);
      CHECK(is_derangement(image));
      CHECK(cmfs_toggle(image, x) == d);
      CHECK(cyclic_stats(image).cyc == cyclic_stats(d).cyc);
      CHECK(cyclic_stats(image).fix_count() == 0);
    }
  });
  CHECK_THROWS_AS(cmfs_toggle(Permutation({1, 3, 2}), 2), std::domain_error);

  // a double drop of d becomes a double excedance after its own hop
  for_each_in_class(D, 5, [](const Permutation& d) {
    CyclicStatRecord cs = cyclic_stats(d);
    for (int x : cs.cdd) {
      CyclicStatRecord after = cyclic_stats(cmfs_toggle(d, x));
      CHECK(std::binary_search(after.cda.begin(), after.cda.end(), x));
    }
  });
}

TEST_CASE("cyclic orbit canonicals and the excedance polynomial") {
  for (int n = 2; n <= 5; ++n) {
    auto orbits = cmfs_orbits(collect_class(D, n));
    for (const auto& orb : orbits) {
      CyclicStatRecord canon = cyclic_stats(orb.canonical);
      CHECK(canon.cda_count() == 0);
      // sum over the orbit of t^exc = t^cpk (1+t)^{n-2cpk} at t = 2
      long lhs = 0;
      for (const Permutation& m : orb.members) {
        long v = 1;
        for (int i = 0; i < cyclic_stats(m).exc(); ++i) v *= 2;
        lhs += v;
      }
      long rhs = 1;
      for (int i = 0; i < canon.cpk(); ++i) rhs *= 2;
      for (int i = 0; i < n - 2 * canon.cpk(); ++i) rhs *= 3;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("history toggles") {
  LaguerreHistory h;
  h.variant = LHVariant::VariantRestricted;
  h.path = MotzkinWord::parse("UYBD");
  h.p = {0, 1, 0, 0};
  REQUIRE(validate(h).ok);
  CHECK(lh_theta_toggle(h, 2) == h);  // yellow steps stay put
  LaguerreHistory flipped = lh_theta_toggle(h, 3);
  CHECK(flipped.path.str() == "UYRD");
  CHECK(lh_theta_toggle(flipped, 3) == h);

  for (const LaguerreHistory& g : enumerate_histories(LHVariant::VariantRestricted, 5)) {
    for (int i = 1; i <= 5; ++i) {
      LaguerreHistory gi = lh_theta_toggle(g, i);
      CHECK(lh_theta_toggle(gi, i) == g);
      CHECK(gi.p == g.p);
      CHECK(gi.path.heights() == g.path.heights());
    }
  }

  // each orbit holds exactly one member without blue level steps
  auto orbits = lh_orbits(enumerate_histories(LHVariant::VariantRestricted, 5));
  for (const auto& orb : orbits) CHECK(orb.canonical.path.count(Step::Lb) == 0);
}
