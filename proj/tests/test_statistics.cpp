#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "permcf/statistics.hpp"

#include "oracles.hpp"

using namespace permcf;

namespace {
const ClassSpec S = parse_class("S");
}

TEST_CASE("linear statistics under the three conventions") {
  Permutation p123({1, 2, 3});
  LinearStatRecord r = linear_stats(p123, Boundary::ZeroZero);
  CHECK(r.pk() == 1);
  CHECK(r.val() == 0);
  CHECK(r.da_count() == 2);
  CHECK(r.dd_count() == 0);
  CHECK(r.des == 0);
  CHECK(r.asc == 2);
  CHECK_THROWS_AS(r.fmax_count(), std::logic_error);

  // 0-inf: the last value can never be a peak
  LinearStatRecord li = linear_stats(p123, Boundary::ZeroInf);
  CHECK(li.pk() == 0);
  CHECK(li.da_count() == 3);
  CHECK(li.fmax_count() == 3);
  CHECK(li.amin_count() == 3);

  LinearStatRecord ri = linear_stats(p123, Boundary::InfZero);
  CHECK(ri.val() == 1);
  CHECK(ri.amax_count() == 0);

  // the running example: value classes of sigma-hat under 0-inf
  Permutation sh = Permutation::parse("5 2 3 8 10 7 6 9 4 1");
  LinearStatRecord lh = linear_stats(sh, Boundary::ZeroInf);
  CHECK(lh.valley == std::vector<int>{1, 2, 6});  // = (Val(sigma)+1) u {1}
  CHECK(lh.pk() == lh.val());
}

TEST_CASE("count relations hold across all of S_6") {
  for (int n = 1; n <= 6; ++n) {
    for_each_in_class(S, n, [&](const Permutation& p) {
      for (Boundary b : {Boundary::ZeroZero, Boundary::ZeroInf, Boundary::InfZero}) {
        LinearStatRecord r = linear_stats(p, b);
        CHECK(r.pk() + r.val() + r.da_count() + r.dd_count() == n);
      }
      LinearStatRecord r0 = linear_stats(p, Boundary::ZeroZero);
      CHECK(r0.pk() == r0.val() + 1);
      CHECK(r0.des == r0.pk() + r0.dd_count() - 1);
      CHECK(r0.asc == r0.val() + r0.da_count());
      LinearStatRecord li = linear_stats(p, Boundary::ZeroInf);
      CHECK(li.val() == li.pk());
      CHECK(r0.val() == r0.pk() - 1);
    });
  }
}

TEST_CASE("cyclic statistics") {
  CyclicStatRecord c = cyclic_stats(Permutation::parse("2 6 4 7 1 5 8 3"));
  CHECK(c.exc() == 5);
  CHECK(c.cval_count() == 2);
  CHECK(c.cpk() == 2);
  CHECK(c.cda_count() == 3);
  CHECK(c.cdd_count() == 1);
  CHECK(c.fix_count() == 0);
  CHECK(c.cyc == 2);

  CyclicStatRecord id5 = cyclic_stats(Permutation::identity(5));
  CHECK(id5.fix_count() == 5);
  CHECK(id5.exc() == 0);
  CHECK(id5.cyc == 5);
  CHECK(id5.cpk() == 0);

  CyclicStatRecord c1423 = cyclic_stats(Permutation({1, 4, 2, 3}));
  NestCrosRecord n1423 = nest_cros(Permutation({1, 4, 2, 3}));
  CHECK(c1423.exc() == 1);
  CHECK(n1423.inv == 2);
  CHECK(n1423.nest == 0);
  CHECK(n1423.cros == 1);

  for (int n = 0; n <= 6; ++n) {
    for_each_in_class(S, n, [&](const Permutation& p) {
      CyclicStatRecord cs = cyclic_stats(p);
      CHECK(cs.cpk() == cs.cval_count());
      CHECK(cs.exc() + cs.drop() + cs.fix_count() == n);
      CHECK(cs.cval_count() + cs.cpk() + cs.cda_count() + cs.cdd_count() +
                cs.fix_count() == n);
    });
  }
}

TEST_CASE("nesting and crossing identities") {
  NestCrosRecord r = nest_cros(Permutation({4, 1, 2, 3}));
  CHECK(r.nest == 0);
  CHECK(r.cros == 2);
  CHECK(r.inv == 3);
  CHECK(nest_cros(Permutation::identity(4)).inv == 0);

  for (int n = 0; n <= 6; ++n) {
    for_each_in_class(S, n, [&](const Permutation& p) {
      NestCrosRecord nc = nest_cros(p);
      CHECK(nc.inv == oracle::naive_inv(p));
      CHECK(nc.inv == oracle::naive_exc(p) + 2 * nc.nest + nc.cros);
      CHECK(nest_cros(inverse(p)).nest == nc.nest);
      CHECK(nc.icr == nest_cros(inverse(p)).cros);
    });
  }
  // 321-avoiders are exactly the nest-free permutations
  Permutation p321({3, 2, 1});
  for_each_in_class(S, 6, [&](const Permutation& p) {
    CHECK((nest_cros(p).nest == 0) == avoids(p, p321));
  });
}

TEST_CASE("star statistics") {
  CHECK(star_stats(Permutation::parse("3 7 6 2 1 5 4")).cyc_star == 2);
  StarStatRecord s1 = star_stats(Permutation({1}));
  CHECK(s1.drop_count() == 1);
  CHECK(s1.cpk() == 0);
  CHECK(s1.cval_count() == 0);
  CHECK(s1.fix_count() == 0);

  for (int n = 1; n <= 6; ++n) {
    for_each_in_class(S, n, [&](const Permutation& p) {
      StarStatRecord st = star_stats(p);
      CHECK(st.drop_count() - 1 == st.cdd_count() + st.cpk());
      CHECK(st.wex_count() == st.cval_count() + st.cda_count() + st.fix_count());
      CHECK(st.wex_count() == cyclic_stats(p).exc());
      CHECK(st.cpk() == st.cval_count());
    });
  }
}

TEST_CASE("vincular counts match the running example and the pair route") {
  Permutation sh = Permutation::parse("5 2 3 8 10 7 6 9 4 1");
  VincularRecord vr = vincular_counts(sh);
  std::vector<int> along_positions;
  for (int i = 1; i <= 10; ++i) along_positions.push_back(vr.v2_31[sh(i) - 1]);
  CHECK(along_positions == std::vector<int>{1, 1, 1, 2, 0, 1, 1, 0, 0, 0});

  VincularRecord mono = vincular_counts(Permutation::identity(6));
  CHECK(mono.t31_2 == 0);
  CHECK(mono.t2_31 == 0);
  CHECK(mono.t2_13 == 0);
  CHECK(mono.t13_2 == 0);

  VincularRecord v1324 = vincular_counts(Permutation({1, 3, 2, 4}));
  CHECK(v1324.t31_2 == 0);
  CHECK(v1324.t2_13 == 1);

  // totals equal the per-index sums (the pair route is asserted internally)
  for_each_in_class(S, 6, [&](const Permutation& p) {
    VincularRecord v = vincular_counts(p);
    long s = 0;
    for (int x : v.v31_2) s += x;
    CHECK(s == v.t31_2);
  });
}

TEST_CASE("shifted sets partition and match the star sets") {
  ShiftedSetRecord id = shifted_sets(Permutation::identity(5));
  CHECK(id.sdn == std::vector<int>{1, 2, 3, 4});
  CHECK(id.scval.empty());
  CHECK(id.scda() == 0);

  for (int m = 1; m <= 6; ++m) {
    for_each_in_class(S, m, [&](const Permutation& p) {
      ShiftedSetRecord sh = shifted_sets(p);
      StarStatRecord st = star_stats(p);
      CHECK(sh.scval == st.cval);
      CHECK(sh.scpeak == st.cpeak);
      CHECK(sh.sdn == st.cdd);
      std::vector<int> cda_fix = st.cda;
      cda_fix.insert(cda_fix.end(), st.fix.begin(), st.fix.end());
      std::sort(cda_fix.begin(), cda_fix.end());
      CHECK(sh.sde == cda_fix);
      CHECK(sh.scval.size() + sh.scpeak.size() + sh.sde.size() + sh.sdn.size() ==
            static_cast<size_t>(m - 1));
    });
  }
}

TEST_CASE("type B statistics") {
  TypeBStatRecord id = type_b_stats(SignedPermutation({1, 2, 3}));
  CHECK(id.des_b == 0);
  CHECK(id.exc_b == 0);
  CHECK(id.neg == 0);

  TypeBStatRecord m1 = type_b_stats(SignedPermutation({-1}));
  CHECK(m1.des_b == 1);
  CHECK(m1.exc_b == 1);
  CHECK(m1.neg == 1);

  CHECK(friends_rank(1) == 1);
  CHECK(friends_rank(-1) == 2);
  CHECK(friends_rank(2) == 3);

  // distribution equality on the eight signed permutations of two letters
  std::map<std::pair<int, int>, int> des_side, exc_side;
  for_each_signed(2, [&](const SignedPermutation& s) {
    TypeBStatRecord r = type_b_stats(s);
    des_side[{r.neg, r.des_b}]++;
    exc_side[{r.neg, r.exc_b}]++;
  });
  CHECK(des_side == exc_side);
}

TEST_CASE("statistic registry dispatch") {
  CHECK(stat_by_name("exc", Permutation({3, 2, 1})) == 1);
  CHECK(stat_by_name("fix", Permutation::identity(5)) == 5);
  CHECK(stat_by_name("inv", Permutation({4, 1, 2, 3})) == 3);
  CHECK(stat_by_name("pk'", Permutation({1, 3, 2})) == 0);  // pk' = val = pk-1
  CHECK(stat_by_name("pk'", Permutation({2, 1, 3})) == 1);
  CHECK(stat_by_name("2-31", Permutation::parse("5 2 3 8 10 7 6 9 4 1")) == 7);
  CHECK(stat_by_name("des_B", SignedPermutation({-1})) == 1);
  CHECK_THROWS_WITH_AS(stat_by_name("bogus", Permutation({1})),
                       doctest::Contains("valid names"), std::invalid_argument);
  CHECK(stat_names().size() == 45);
  CHECK(signed_stat_names().size() == 3);
}

TEST_CASE("statistics needed for the q-Narayana table rows") {
  // foremaxima of the singleton
  CHECK(stat_by_name("fmax", Permutation({1})) == 1);
  // double descents under inf-0 for the reversal
  CHECK(stat_by_name("rdd", Permutation({2, 1})) == 2);
  CHECK(stat_by_name("amax", Permutation({2, 1})) == 2);
}
