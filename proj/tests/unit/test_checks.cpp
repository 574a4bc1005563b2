#include <doctest.h>

#include "okforce/checks.hpp"
#include "okforce/errors.hpp"

using namespace okf;

TEST_CASE("catalog ids are unique and runnable on a small universe") {
  SuiteOptions o;
  o.nmax = 4;
  o.tree_nmax = 6;
  o.random_cases = 20;
  o.random_nmax = 7;
  std::vector<std::string> ids;
  for (const auto& s : check_catalog()) {
    CHECK(std::find(ids.begin(), ids.end(), s.id) == ids.end());
    ids.push_back(s.id);
  }
  CHECK(ids.size() == 24);
  for (const auto& r : run_suite({}, o)) {
    CHECK_MESSAGE(r.passed(), r.id);
    CHECK(r.instances > 0);
  }
}

TEST_CASE("suite options beyond the exact solvers are refused") {
  SuiteOptions o;
  o.nmax = 7;
  CHECK_THROWS_AS(validate_suite_options(o), LimitError);
  CHECK_THROWS(run_check("C99", SuiteOptions{}));
}

TEST_CASE("scans report no counterexamples on small universes") {
  ScanOptions o;
  o.nmax = 5;
  for (const std::string p : {"p1", "p2", "p3", "p4"}) {
    const auto r = scan(p, o);
    CHECK(!r.records.empty());
    CHECK(r.verdict == "no counterexample in universe");
  }
}
