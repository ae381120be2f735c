#include <doctest.h>

#include "latentfs/verify.hpp"

namespace verify = latentfs::verify;

TEST_CASE("series suite passes well under its tolerance") {
  verify::SuiteResult res = verify::series_suite(20, 1234);
  CHECK(res.name == "series");
  CHECK(res.trials == 20);
  CHECK(res.pass);
  CHECK(res.first_failure.empty());
  CHECK(res.tolerance == 1e-8);
  // 400 geometric terms at ratio 0.9 leave a remainder far below 1e-8.
  CHECK(res.max_deviation < 1e-10);
}

TEST_CASE("enumeration suite matches matrix powers exactly-ish") {
  verify::SuiteResult res = verify::enumeration_suite(10, 99);
  CHECK(res.name == "enumeration");
  CHECK(res.pass);
  CHECK(res.tolerance == 1e-12);
  CHECK(res.max_deviation < 1e-12);
}

TEST_CASE("markov suite ties the chain algebra together") {
  verify::SuiteResult res = verify::markov_suite(20, 7);
  CHECK(res.name == "markov");
  CHECK(res.pass);
  CHECK(res.tolerance == 1e-10);
  CHECK(res.max_deviation < 1e-10);
}

TEST_CASE("suites are deterministic in the seed") {
  verify::SuiteResult a = verify::series_suite(5, 42);
  verify::SuiteResult b = verify::series_suite(5, 42);
  CHECK(a.max_deviation == b.max_deviation);

  verify::SuiteResult c = verify::markov_suite(5, 42);
  verify::SuiteResult d = verify::markov_suite(5, 42);
  CHECK(c.max_deviation == d.max_deviation);
}

TEST_CASE("deviation grows with trials but stays bounded") {
  // More trials can only widen the worst case, never shrink it.
  verify::SuiteResult few = verify::series_suite(3, 8);
  verify::SuiteResult more = verify::series_suite(12, 8);
  CHECK(more.max_deviation >= few.max_deviation);
  CHECK(more.pass);
}
