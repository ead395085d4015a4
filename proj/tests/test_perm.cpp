#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "permcf/perm.hpp"

#include "oracles.hpp"

using namespace permcf;

TEST_CASE("construction and parsing") {
  Permutation p = Permutation::parse("3 1 2");
  CHECK(p.size() == 3);
  CHECK(p(1) == 3);
  CHECK(p(3) == 2);
  CHECK(p.str() == "3 1 2");
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK(Permutation::identity(0).size() == 0);
}

TEST_CASE("inverse") {
  CHECK(inverse(Permutation({1, 2, 3})) == Permutation({1, 2, 3}));
  CHECK(inverse(Permutation({4, 1, 2, 3})) == Permutation({2, 3, 4, 1}));
  for_each_in_class(parse_class("S"), 5, [](const Permutation& p) {
    CHECK(inverse(inverse(p)) == p);
  });
}

TEST_CASE("reversal and complement") {
  Permutation p({1, 3, 2, 4});
  CHECK(conjugate(p, Conjugation::R) == Permutation({4, 2, 3, 1}));
  CHECK(conjugate(p, Conjugation::C) == Permutation({4, 2, 3, 1}));
  CHECK(conjugate(Permutation({2, 3, 1, 4}), Conjugation::R) == Permutation({4, 1, 3, 2}));
  for_each_in_class(parse_class("S"), 5, [](const Permutation& q) {
    CHECK(conjugate(conjugate(q, Conjugation::R), Conjugation::R) == q);
    CHECK(conjugate(conjugate(q, Conjugation::C), Conjugation::C) == q);
  });
  CHECK(conjugation_from_name("rcr") == Conjugation::RCR);
  CHECK_THROWS_AS(conjugation_from_name("x"), std::invalid_argument);
}

TEST_CASE("hat and star") {
  CHECK(hat(Permutation::parse("4 1 2 7 9 6 5 8 3")).str() == "5 2 3 8 10 7 6 9 4 1");
  CHECK(hat(Permutation({1})).str() == "2 1");

  StarMap s = star(Permutation::parse("3 7 6 2 1 5 4"));
  CHECK(s.str() == "7 2 6 5 1 0 4 3");
  CHECK(s.cycle_count() == 2);
  CHECK(s(0) == 7);
  CHECK(s.preimage(7) == 0);
  CHECK(star(Permutation({1, 2})).str() == "2 0 1");
}

TEST_CASE("standard cycle form and the cycle word") {
  Permutation p = Permutation::parse("2 6 4 7 1 5 8 3");
  CHECK(stan(p).str() == "(6 5 1 2)(8 3 4 7)");
  CHECK(iota(p).str() == "6 5 1 2 8 3 4 7");
  CHECK(iota_inverse(iota(p)) == p);

  // a single n-cycle leads with n
  Permutation cyc({2, 3, 4, 5, 1});
  CHECK(stan(cyc).cycles.size() == 1);
  CHECK(stan(cyc).cycles[0][0] == 5);

  CHECK_THROWS_AS(iota(Permutation({1, 3, 2})), std::domain_error);
  CHECK(iota(Permutation({1, 3, 2}), true).str() == "1 3 2");

  // injectivity on the derangements of six
  std::set<Permutation> words;
  long count = 0;
  for_each_in_class(parse_class("D"), 6, [&](const Permutation& d) {
    words.insert(iota(d));
    ++count;
    CHECK(iota_inverse(iota(d)) == d);
  });
  CHECK(static_cast<long>(words.size()) == count);
}

TEST_CASE("pattern avoidance agrees with the triple-loop oracle") {
  std::vector<Permutation> patterns;
  for_each_in_class(parse_class("S"), 3,
                    [&](const Permutation& t) { patterns.push_back(t); });
  REQUIRE(patterns.size() == 6);
  for (int n = 0; n <= 6; ++n) {
    for_each_in_class(parse_class("S"), n, [&](const Permutation& p) {
      for (const Permutation& tau : patterns)
        CHECK(avoids(p, tau) == oracle::naive_avoids(p, tau));
    });
  }
  CHECK(avoids(Permutation::identity(7), Permutation({3, 2, 1})));
}

TEST_CASE("class enumeration sizes") {
  CHECK(collect_class(parse_class("S"), 4).size() == 24);
  CHECK(collect_class(parse_class("D"), 4).size() == 9);
  CHECK(collect_class(parse_class("S(231)"), 4).size() == 14);  // Catalan
  CHECK(collect_class(parse_class("S(321)"), 5).size() == 42);
  long b2 = 0;
  for_each_signed(2, [&](const SignedPermutation&) { ++b2; });
  CHECK(b2 == 8);

  // lexicographic order
  std::vector<std::string> order;
  for_each_in_class(parse_class("S"), 3,
                    [&](const Permutation& p) { order.push_back(p.str()); });
  CHECK(order == std::vector<std::string>{"1 2 3", "1 3 2", "2 1 3", "2 3 1", "3 1 2",
                                          "3 2 1"});
}

TEST_CASE("resource caps guard the enumerations") {
  Caps saved = global_caps();
  global_caps().s_max = 4;
  global_caps().b_max = 2;
  CHECK_THROWS_AS(collect_class(parse_class("S"), 5), ResourceError);
  CHECK_THROWS_AS(for_each_signed(3, [](const SignedPermutation&) {}), ResourceError);
  global_caps() = saved;
}

TEST_CASE("class parsing") {
  CHECK(parse_class("S").str() == "S");
  CHECK(parse_class("S(231)").str() == "S(231)");
  CHECK(parse_class("D(321)").str() == "D(321)");
  CHECK_THROWS_AS(parse_class("Q"), std::invalid_argument);
  CHECK_THROWS_AS(parse_class("S(12)"), std::invalid_argument);
}

TEST_CASE("signed permutation basics") {
  SignedPermutation s({-2, 1, -3});
  CHECK(s.size() == 3);
  CHECK(s(1) == -2);
  CHECK(s(-1) == 2);
  CHECK(s.str() == "-2 1 -3");
  CHECK_THROWS_AS(SignedPermutation({1, 1}), std::invalid_argument);
}
