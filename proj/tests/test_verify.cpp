#include <doctest.h>

#include "dycklat/verify.hpp"

using namespace dycklat;

namespace {

CheckOptions options(int n_max, bool fault) {
  CheckOptions o;
  o.n_max = n_max;
  o.families = {FamilyParam::finite(2), FamilyParam::finite(3), FamilyParam::infinity()};
  o.order = 16;
  o.inject_cover_fault = fault;
  return o;
}

}  // namespace

TEST_CASE("check harness passes and covers every operation") {
  const CheckReport report = run_checks(options(8, false));
  CHECK(report.ok());
  CHECK(report.missing.empty());
  CHECK(report.exercised.size() >= checked_operations().size());
  for (const CheckCell& c : report.cells) {
    CAPTURE(c.check);
    CHECK(c.passed);
    CHECK(c.comparisons > 0);
  }
  CHECK(report.render().find("ALL PASS") != std::string::npos);
}

TEST_CASE("check harness trivially passes at tiny sizes") {
  CheckOptions o = options(2, false);
  o.families = {FamilyParam::finite(2)};
  CHECK(run_checks(o).ok());
}

TEST_CASE("check harness catches an off-by-one cover filter") {
  const CheckReport report = run_checks(options(6, true));
  CHECK_FALSE(report.ok());
  bool saw = false;
  for (const CheckCell& c : report.cells) {
    if (c.passed) continue;
    CHECK(c.check == "covers");
    CHECK_FALSE(c.family.is_infinite());
    CHECK(c.counterexample.find("n=") == 0);
    saw = true;
  }
  CHECK(saw);
  const std::string text = report.render();
  CHECK(text.find("counterexample covers p=2: n=2") != std::string::npos);
  CHECK(text.find("MISMATCH") != std::string::npos);
}

TEST_CASE("check harness refuses oversized runs") {
  CheckOptions o = options(40, false);
  CHECK_THROWS_AS(run_checks(o), Error);
}

TEST_CASE("report does not depend on thread scheduling") {
  const std::string a = run_checks(options(6, false)).render();
  const std::string b = run_checks(options(6, false)).render();
  CHECK(a == b);
}
