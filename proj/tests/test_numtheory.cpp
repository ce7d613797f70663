#include <doctest.h>

#include "perfekt/cone.hpp"
#include "perfekt/error.hpp"
#include "perfekt/numtheory.hpp"

using namespace perfekt;

namespace {

const Scalar r2 = Scalar::sqrt(2);

// Euclidean algorithm oracle for rationals.
std::vector<Integer> euclid(Integer a, Integer b) {
  std::vector<Integer> out;
  while (b != 0) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    out.push_back(q);
    Integer r = a - q * b;
    a = b;
    b = r;
  }
  return out;
}

}  // namespace

TEST_CASE("continued fraction expansions") {
  auto s = cf_expand(r2, 5);
  CHECK(s.quotients == std::vector<Integer>{1, 2, 2, 2, 2});
  REQUIRE(s.period_start);
  CHECK(*s.period_start == 1);
  CHECK(s.period_length == 1);
  CHECK(cf_expand(Scalar::fraction(7, 5), 4).quotients == std::vector<Integer>{1, 2, 2});
  CHECK(cf_expand(Scalar(2), 1).quotients == std::vector<Integer>{2});
  CHECK_THROWS_AS(cf_expand(r2, 0), InputError);
  auto s3 = cf_expand(Scalar::sqrt(3), 6);
  CHECK(s3.quotients == std::vector<Integer>{1, 1, 2, 1, 2, 1});
  CHECK(s3.period_length == 2);
  for (auto [a, b] : {std::pair{355, 113}, std::pair{-17, 5}, std::pair{1, 7}}) {
    CHECK(cf_expand(Scalar::fraction(a, b), 20).quotients == euclid(a, b));
  }
}

TEST_CASE("continued fraction of e") {
  auto e = cf_of_e(9);
  CHECK(e.quotients == std::vector<Integer>{2, 1, 2, 1, 1, 4, 1, 1, 6, 1});
  CHECK(cf_of_e(2).quotients[2] == 2);
  CHECK(cf_of_e(5).quotients[5] == 4);
  auto c = convergents(cf_of_e(4), 5);
  std::vector<std::pair<long, long>> expect = {{2, 1}, {3, 1}, {8, 3}, {11, 4}, {19, 7}};
  for (int i = 0; i < 5; ++i) {
    CHECK(c[i].p == expect[i].first);
    CHECK(c[i].q == expect[i].second);
  }
}

TEST_CASE("convergents of sqrt2") {
  auto c = convergents(cf_expand(r2, 13), 13);
  std::vector<std::pair<long, long>> expect = {{1, 1}, {3, 2}, {7, 5}, {17, 12}, {41, 29}};
  for (int i = 0; i < 5; ++i) {
    CHECK(c[i].p == expect[i].first);
    CHECK(c[i].q == expect[i].second);
  }
  for (const auto& x : c) {
    Scalar err = (r2 - Scalar(Rational(x.p, x.q))).abs();
    CHECK(err < Scalar(Rational(Integer(1), x.q * x.q)));
  }
  CHECK(convergents(cf_expand(Scalar(2), 1), 1)[0].p == 2);
  CHECK_THROWS_AS(convergents(cf_expand(Scalar(2), 1), 2), PreconditionViolated);
}

TEST_CASE("pell solutions are the below-sqrt2 convergents") {
  auto pell = pell_negative_solutions(6);
  CHECK(pell[0] == std::pair<Integer, Integer>{1, 1});
  CHECK(pell[1] == std::pair<Integer, Integer>{7, 5});
  CHECK(pell[2] == std::pair<Integer, Integer>{41, 29});
  CHECK(pell_negative_solutions(4)[3] == std::pair<Integer, Integer>{239, 169});
  auto c = convergents(cf_expand(r2, 12), 12);
  std::vector<std::pair<Integer, Integer>> below;
  for (const auto& x : c) {
    if (Scalar(Rational(x.p, x.q)) < r2) below.emplace_back(x.p, x.q);
  }
  REQUIRE(below.size() == 6);
  CHECK(below == pell);
  for (const auto& [p, q] : below) {
    CHECK(p * p - 2 * q * q == -1);
    CHECK(cone_contains(Cone::sqrt2(), IntVec{p, q}));
  }
}

TEST_CASE("badly approximable bound") {
  CHECK(badly_approx_check(7, 5));
  CHECK(badly_approx_check(41, 29));
  // 3/2 lies above sqrt2: |sqrt2 - 3/2| = 0.0857.. < sqrt2/16 = 0.0883..
  CHECK_FALSE(badly_approx_check(3, 2));
  // Holds exactly for the convergents below sqrt2 and fails for those above.
  for (const auto& x : convergents(cf_expand(r2, 15), 15)) {
    bool below = x.p * x.p - 2 * x.q * x.q < 0;
    CHECK(badly_approx_check(x.p, x.q) == below);
  }
}

TEST_CASE("simultaneous approximation") {
  auto a = simultaneous_approx({Scalar::fraction(1, 3)}, Rational(1, 2));
  CHECK(a.q == 1);
  CHECK(a.p == std::vector<Integer>{0});
  Rational eps(1, 10);
  auto b = simultaneous_approx({r2, r2 * Scalar::fraction(1, 2)}, eps);
  CHECK(b.q <= 100);
  // Exhaustive oracle: no smaller q works.
  for (Integer q = 1; q <= b.q; ++q) {
    bool ok = true;
    std::vector<Integer> ps;
    for (const auto& al : {r2, r2 * Scalar::fraction(1, 2)}) {
      bool any = false;
      for (Integer p = -2; p <= 2 * q + 2; ++p) {
        if ((al - Scalar(Rational(p, q))).abs() <= Scalar(Rational(eps / Rational(q)))) any = true;
      }
      ok = ok && any;
    }
    CHECK(ok == (q == b.q));
  }
  auto h = simultaneous_approx({Scalar::fraction(1, 2)}, Rational(1, 3));
  CHECK(h.q == 2);
  CHECK(h.p == std::vector<Integer>{1});
}
