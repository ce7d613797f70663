#include <doctest.h>

#include "perfekt/casestudy.hpp"
#include "perfekt/reproduce.hpp"

using namespace perfekt;

TEST_CASE("reproduce filters by key prefix") {
  ReproOptions o;
  o.only = "sqrt2";
  auto rows = reproduce(o);
  CHECK(rows.size() == 5);
  for (const auto& r : rows) {
    INFO(r.key << ": " << r.detail);
    CHECK(r.key.rfind("sqrt2/", 0) == 0);
    CHECK(r.pass);
  }
  CHECK(reproduce_keys().size() == 12);
}

TEST_CASE("corrupted Q2 fails its row") {
  ReproOptions o;
  o.only = "sqrt2/q2";
  SymMatrix bad = q2_matrix();
  bad.set(0, 1, bad(0, 1) + Scalar::fraction(1, 1000));
  o.q2_override = bad;
  auto rows = reproduce(o);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].key == "sqrt2/q2-vertex");
  CHECK_FALSE(rows[0].pass);
  o.q2_override.reset();
  CHECK(reproduce(o)[0].pass);
}
