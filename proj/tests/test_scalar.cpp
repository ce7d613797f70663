#include <doctest.h>

#include <random>

#include "perfekt/error.hpp"
#include "perfekt/matrix.hpp"
#include "perfekt/scalar.hpp"

using namespace perfekt;

namespace {

Scalar random_quad(std::mt19937_64& rng, int d = 2) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 12);
  return Scalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), d);
}

const Scalar r2 = Scalar::sqrt(2);

}  // namespace

TEST_CASE("scalar_sign examples") {
  CHECK(Scalar::fraction(3, 2).sign() == 1);
  CHECK(Scalar(Rational(0), Rational(0), 2).sign() == 0);
  CHECK(Scalar(Rational(1), Rational(-1), 2).sign() == -1);
  CHECK(Scalar(Rational(-1), Rational(1), 2).sign() == 1);
  CHECK(Scalar(Rational(3), Rational(-2), 2).sign() == 1);   // 9 > 8
  CHECK(Scalar(Rational(-7), Rational(5), 2).sign() == 1);   // 50 > 49
  CHECK(Scalar(Rational(99), Rational(-70), 2).sign() == 1);
}

TEST_CASE("canonical form makes equality structural") {
  Scalar x(Rational(2, 4), Rational(0), 2);
  CHECK(x == Scalar::fraction(1, 2));
  CHECK(x.radicand() == 0);
  CHECK((r2 * r2) == Scalar(2));
  CHECK((r2 * r2).is_integer());
  CHECK_THROWS_AS(Scalar(Rational(0), Rational(1), 4), InputError);
  CHECK_THROWS_AS(r2 + Scalar::sqrt(3), FieldMismatch);
  CHECK_NOTHROW(r2 + Scalar(5));
}

TEST_CASE("field axioms on random values") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Scalar x = random_quad(rng), y = random_quad(rng), z = random_quad(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x * y) * z == x * (y * z));
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("ordering agrees with high-precision evaluation") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    Scalar x = random_quad(rng);
    mpf_class root(2, 256);
    root = sqrt(root);
    mpf_class v = mpf_class(x.rational_part(), 256) + mpf_class(x.irrational_part(), 256) * root;
    double f = v.get_d();
    if (std::abs(f) > 1e-9) {
      CHECK(x.sign() == (f > 0 ? 1 : -1));
      ++checked;
    }
  }
  CHECK(checked > 900);
}

TEST_CASE("ordering is compatible with addition and positive scaling") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    Scalar x = random_quad(rng), y = random_quad(rng), z = random_quad(rng);
    if (x < y) {
      CHECK(x + z < y + z);
      Scalar p = z.abs() + Scalar(1);
      CHECK(x * p < y * p);
    }
  }
}

TEST_CASE("floor and round of quadratic irrationals") {
  CHECK(r2.floor() == 1);
  CHECK((-r2).floor() == -2);
  CHECK((Scalar(1) + r2).floor() == 2);
  CHECK(Scalar::fraction(-7, 2).floor() == -4);
  CHECK(Scalar::fraction(7, 2).round() == 4);
  CHECK((r2 * Scalar(1000000)).floor() == 1414213);
  CHECK(Scalar(5).ceil() == 5);
  CHECK(r2.ceil() == 2);
}

TEST_CASE("text format is bit-exact and round-trips") {
  CHECK(Scalar(Rational(-1), Rational(-1, 2), 2).str() == "(-1)+(-1/2)*sqrt(2)");
  CHECK(Scalar::fraction(6, 4).str() == "3/2");
  CHECK(Scalar(7).str() == "7");
  CHECK(Scalar::parse("(-1)+(-1/2)*sqrt(2)") == Scalar(Rational(-1), Rational(-1, 2), 2));
  CHECK(Scalar::parse("sqrt(2)") == r2);
  CHECK(Scalar::parse("-sqrt(2)") == -r2);
  CHECK(Scalar::parse("(1/4)*sqrt(2)") == r2 * Scalar::fraction(1, 4));
  CHECK(Scalar::parse(" -3/9 ") == Scalar::fraction(-1, 3));
  CHECK_THROWS_AS(Scalar::parse("1/0"), InputError);
  CHECK_THROWS_AS(Scalar::parse("abc"), InputError);
  CHECK_THROWS_AS(Scalar::parse("(1)+(2)*sqrt(8)"), InputError);
  CHECK_THROWS_AS(Scalar::parse("1.5"), InputError);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Scalar x = random_quad(rng, i % 2 ? 2 : 5);
    CHECK(Scalar::parse(x.str()) == x);
    CHECK(Scalar::parse(x.str()).str() == x.str());
  }
}

TEST_CASE("quad_eval examples") {
  auto q1 = SymMatrix::from_rows({{-1, 0}, {0, 2}});
  CHECK(quad_eval(q1, IntVec{1, 1}) == Scalar(1));
  CHECK(quad_eval(q1, Vec{r2, Scalar(1)}) == Scalar(0));
  CHECK(quad_eval(q1, IntVec{0, 0}) == Scalar(0));
  CHECK_THROWS_AS(quad_eval(q1, IntVec{1, 1, 1}), DimensionMismatch);
}

TEST_CASE("frobenius examples") {
  Scalar one_r2 = Scalar(1) + r2;
  auto a = SymMatrix::from_rows({{3, one_r2}, {one_r2, 2}});
  auto q1 = SymMatrix::from_rows({{-1, 0}, {0, 2}});
  Scalar h = Scalar(Rational(1, 2), Rational(1, 4), 2);  // sqrt2/4 + 1/2
  auto q2 = SymMatrix::from_rows({{Scalar(Rational(-1), Rational(-1, 2), 2), h}, {h, 1}});
  CHECK(frobenius(a, q1) == Scalar(1));
  CHECK(frobenius(a, q2) == Scalar(1));
  CHECK(frobenius(SymMatrix::identity(2), SymMatrix::identity(2)) == Scalar(2));
  CHECK_THROWS_AS(frobenius(a, SymMatrix::identity(3)), DimensionMismatch);
}

TEST_CASE("quad_eval is equivariant under unimodular changes of basis") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> small(-3, 3);
  IntMatrix gens[] = {{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}},
                      {{1, 0, 0}, {0, 1, -1}, {0, 0, 1}}, {{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (int t = 0; t < 50; ++t) {
    IntMatrix u = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int s = 0; s < 6; ++s) u = multiply(u, gens[rng() % 4]);
    CHECK(abs(determinant(u)) == 1);
    SymMatrix q(3);
    for (int i = 0; i < 3; ++i) {
      for (int j = i; j < 3; ++j) q.set(i, j, Scalar(Rational(small(rng)), Rational(small(rng), 2), 2));
    }
    IntVec z = {small(rng), small(rng), small(rng)};
    CHECK(quad_eval(q, perfekt::apply(u, z)) == quad_eval(congruence(q, u), z));
  }
}

TEST_CASE("exact linear algebra helpers") {
  Matrix m = {{1, 2}, {2, 4}};
  CHECK(rank(m) == 1);
  CHECK(determinant(m) == Scalar(0));
  auto ns = nullspace(m, 2);
  REQUIRE(ns.size() == 1);
  CHECK(dot(ns[0], Vec{1, 2}) == Scalar(0));
  auto x = solve({{2, 1}, {1, 3}}, {3, 5});
  REQUIRE(x);
  CHECK((*x)[0] == Scalar::fraction(4, 5));
  CHECK((*x)[1] == Scalar::fraction(7, 5));
  IntMatrix u = {{2, 1}, {1, 1}};
  CHECK(multiply(u, unimodular_inverse(u)) == IntMatrix{{1, 0}, {0, 1}});
  CHECK_THROWS_AS(unimodular_inverse({{2, 0}, {0, 1}}), PreconditionViolated);
  CHECK(determinant(IntMatrix{{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}) == 4);
}
