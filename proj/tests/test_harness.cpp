#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "permcf/harness.hpp"
#include "permcf/identity.hpp"

using namespace permcf;

TEST_CASE("registry ids are unique and well formed") {
  auto ids = registry_ids();
  std::set<std::string> uniq(ids.begin(), ids.end());
  CHECK(uniq.size() == ids.size());
  CHECK(uniq.count("eq-1.2") == 1);
  CHECK(uniq.count("fig-3") == 1);
  CHECK(uniq.count("thm-3.8") == 1);
  for (const auto& c : theorem_registry()) {
    CHECK_FALSE(c.description.empty());
    bool known_method = c.method == "enumeration-equality" ||
                        c.method == "multiset-equality" || c.method == "grid-identity" ||
                        c.method == "series-coefficient" || c.method == "float-spot" ||
                        c.method == "example-regression";
    CHECK(known_method);
  }
}

TEST_CASE("unknown ids are rejected with the full list") {
  VerifyConfig cfg;
  cfg.ids = {"thm-9.99"};
  CHECK_THROWS_WITH_AS(verify(cfg), doctest::Contains("valid ids"), std::invalid_argument);
}

TEST_CASE("example regression passes") {
  Report r = reproduce_examples();
  REQUIRE(r.cases.size() == 2);
  for (const auto& c : r.cases) CHECK(c.status == "pass");
  CHECK(r.pass);
}

TEST_CASE("a small verify run and its JSON shape") {
  VerifyConfig cfg;
  cfg.ids = {"eq-1.2", "eq-1.10"};
  cfg.max_n = 5;
  Report r = verify(cfg);
  CHECK(r.pass);
  CHECK(r.cases.size() == 2);
  CHECK(r.cases[0].id == "eq-1.2");
  CHECK(r.cases[0].n == 5);
  std::string json = report_json(r);
  CHECK(json.find("\"version\"") != std::string::npos);
  CHECK(json.find("\"runtime_ms\": 0") != std::string::npos);
  CHECK(json.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("max-n below a case's smallest size skips it") {
  VerifyConfig cfg;
  cfg.ids = {"eq-orbit-excgf"};
  cfg.max_n = 1;
  Report r = verify(cfg);
  CHECK(r.cases[0].status == "skip");
  CHECK(r.pass);  // skipped cases do not fail the run
}

TEST_CASE("reports are byte-identical across runs") {
  VerifyConfig cfg;
  cfg.ids = {"eq-1.2", "examples", "lem-5.1"};
  cfg.max_n = 5;
  std::string a = report_json(verify(cfg));
  std::string b = report_json(verify(cfg));
  CHECK(a == b);
}

TEST_CASE("tables reproduce the eulerian triangle") {
  TableOptions opt;
  opt.cls = "S";
  opt.stats = {"des"};
  opt.n = 5;
  std::string csv = make_table(opt);
  CHECK(csv ==
        "n,coefficients...\n"
        "0,1\n"
        "1,1\n"
        "2,1,1\n"
        "3,1,4,1\n"
        "4,1,11,11,1\n"
        "5,1,26,66,26,1\n");

  opt.cls = "S(231)";
  opt.n = 4;
  std::string narayana = make_table(opt);
  CHECK(narayana.find("4,1,6,6,1") != std::string::npos);

  opt.cls = "B";
  opt.stats = {"des_B"};
  opt.n = 2;
  std::string b = make_table(opt);
  CHECK(b.find("2,1,6,1") != std::string::npos);

  opt.format = "json";
  CHECK(make_table(opt).find("\"rows\"") != std::string::npos);
  opt.format = "tsv";
  CHECK_THROWS_AS(make_table(opt), std::invalid_argument);
}

TEST_CASE("joint tables carry exponent tuples") {
  TableOptions opt;
  opt.cls = "D";
  opt.stats = {"exc", "cyc"};
  opt.n = 3;
  std::string csv = make_table(opt);
  // D_3 = {231, 312}: both with two excedances? no: 231 has exc 2, 312 has exc 1
  CHECK(csv.find("3,1,1,1") != std::string::npos);
  CHECK(csv.find("3,2,1,1") != std::string::npos);
}
