#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "permcf/paths.hpp"

using namespace permcf;

TEST_CASE("motzkin words validate at construction") {
  MotzkinWord w = MotzkinWord::parse("UBRDURBD");
  CHECK(w.length() == 8);
  CHECK(w.heights() == std::vector<int>{0, 1, 1, 1, 0, 1, 1, 1, 0});
  CHECK(w.str() == "UBRDURBD");
  CHECK(MotzkinWord().heights() == std::vector<int>{0});
  CHECK(MotzkinWord::parse("UUDD").heights() == std::vector<int>{0, 1, 2, 1, 0});

  CHECK_THROWS_AS(MotzkinWord::parse("DU"), std::invalid_argument);   // dips below
  CHECK_THROWS_AS(MotzkinWord::parse("UU"), std::invalid_argument);   // unbalanced
  CHECK_THROWS_AS(MotzkinWord::parse("UXD"), std::invalid_argument);  // bad letter
  CHECK(MotzkinWord::parse("YY").uses_yellow());
}

TEST_CASE("history validation per variant") {
  LaguerreHistory h = LaguerreHistory::parse("UBRDURBD;0,0,0,1,0,1,1,0", LHVariant::Full);
  CHECK(validate(h).ok);
  CHECK(h.str() == "UBRDURBD;0,0,0,1,0,1,1,0");

  LaguerreHistory bad = h;
  bad.p[3] = 2;  // p_4 > h_3 = 1
  LHValidation v = validate(bad);
  CHECK_FALSE(v.ok);
  CHECK(v.index == 4);

  // restricted form: red level and down steps lose one unit of slack
  LaguerreHistory res;
  res.variant = LHVariant::Restricted;
  res.path = MotzkinWord::parse("URD");
  res.p = {0, 0, 0};
  CHECK(validate(res).ok);
  res.p = {0, 1, 0};  // red level at height 1 allows only p=0
  CHECK_FALSE(validate(res).ok);

  // variant-restricted: yellow steps pin the weight to the height
  LaguerreHistory var;
  var.variant = LHVariant::VariantRestricted;
  var.path = MotzkinWord::parse("UYD");
  var.p = {0, 1, 0};
  CHECK(validate(var).ok);
  var.p = {0, 0, 0};
  CHECK_FALSE(validate(var).ok);
  // yellow steps are rejected outside the variant form
  LaguerreHistory wrong;
  wrong.variant = LHVariant::Full;
  wrong.path = MotzkinWord::parse("Y");
  wrong.p = {0};
  CHECK_FALSE(validate(wrong).ok);

  // weight vector must have the path's length
  LaguerreHistory short_p;
  short_p.variant = LHVariant::Full;
  short_p.path = MotzkinWord::parse("BB");
  short_p.p = {0};
  CHECK_FALSE(validate(short_p).ok);
}

TEST_CASE("path enumeration hits the catalan counts") {
  const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (int n = 0; n <= 8; ++n) {
    CHECK(static_cast<long>(enumerate_paths(PathKind::TwoMotzkin, n).size()) ==
          catalan[n + 1]);
    CHECK(static_cast<long>(enumerate_paths(PathKind::TwoMotzkinStar, n).size()) ==
          catalan[n]);
  }
  CHECK(enumerate_paths(PathKind::TwoMotzkin, 0).size() == 1);  // the empty path

  // starred paths never hold a red level step on the axis
  for (const MotzkinWord& w : enumerate_paths(PathKind::TwoMotzkinStar, 5)) {
    for (int i = 1; i <= w.length(); ++i)
      if (w.height(i - 1) == 0) CHECK(w.step(i) != Step::Lr);
  }
}

TEST_CASE("history enumeration counts") {
  // |LH_n| = (n+1)!, |LH*_n| = n!, and the variant form also has n! members
  const long fact[] = {1, 1, 2, 6, 24, 120, 720};
  for (int n = 0; n <= 5; ++n) {
    CHECK(static_cast<long>(enumerate_histories(LHVariant::Full, n).size()) == fact[n + 1]);
    CHECK(static_cast<long>(enumerate_histories(LHVariant::Restricted, n).size()) == fact[n]);
    CHECK(static_cast<long>(enumerate_histories(LHVariant::VariantRestricted, n).size()) ==
          fact[n]);
  }
  for (const LaguerreHistory& h : enumerate_histories(LHVariant::VariantRestricted, 4))
    CHECK(validate(h).ok);
}

TEST_CASE("serialization round trip") {
  for (const LaguerreHistory& h : enumerate_histories(LHVariant::Full, 4)) {
    LaguerreHistory back = LaguerreHistory::parse(h.str(), LHVariant::Full);
    CHECK(back == h);
  }
  CHECK_THROWS_AS(LaguerreHistory::parse("UD", LHVariant::Full), std::invalid_argument);
}

TEST_CASE("enumeration respects the cap") {
  Caps saved = global_caps();
  global_caps().s_max = 3;
  CHECK_THROWS_AS(enumerate_paths(PathKind::TwoMotzkin, 4), ResourceError);
  CHECK_THROWS_AS(enumerate_histories(LHVariant::Full, 4), ResourceError);
  global_caps() = saved;
}
