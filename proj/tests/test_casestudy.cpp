#include <doctest.h>

#include <chrono>
#include <iostream>
#include <random>

#include "perfekt/casestudy.hpp"
#include "perfekt/error.hpp"

using namespace perfekt;

namespace {

const Scalar r2 = Scalar::sqrt(2);

IntVec iv(long p, long q) { return {Integer(p), Integer(q)}; }

void check_report(const Report& rep) {
  for (const auto& i : rep) {
    INFO(i.key << ": " << i.detail);
    CHECK(i.pass);
  }
}

// Exhaustive minimum over K cap Z^2 with q <= bound.
Scalar brute_min(const SymMatrix& q, long bound) {
  std::optional<Scalar> best;
  for (long r = 1; r <= bound; ++r) {
    for (long p = 0; Scalar(p) <= r2 * Scalar(r); ++p) {
      Scalar v = quad_eval(q, iv(p, r));
      if (!best || v < *best) best = v;
    }
  }
  return *best;
}

}  // namespace

TEST_CASE("face_matrix examples and identical isotropy") {
  CHECK(face_matrix(Scalar(-1), Scalar(0)) == SymMatrix::from_rows({{-1, 0}, {0, 2}}));
  CHECK(face_matrix(Scalar(1), -r2) == SymMatrix::from_rows({{1, -r2}, {-r2, 2}}));
  SymMatrix q2 = q2_matrix();
  CHECK(q2(0, 0) == Scalar(-1) - r2 / Scalar(2));
  CHECK(q2(1, 1) == Scalar(1));
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
  for (int t = 0; t < 100; ++t) {
    Scalar a(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), 2);
    Scalar b(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), 2);
    CHECK(quad_eval(face_matrix(a, b), Vec{r2, Scalar(1)}).is_zero());
  }
}

TEST_CASE("reduced matrix of face points is entrywise nonnegative") {
  // In F, Q~ = [[2a + 2 sqrt2 b + c, sqrt2 b + c], [sqrt2 b + c, c]] lies in N^2.
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 7);
  int tested = 0;
  while (tested < 100) {
    Scalar a = Scalar(Rational(num(rng), den(rng))), b = Scalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), 2);
    Scalar c = Scalar(-2) * a - Scalar(2) * r2 * b;
    if (c.sign() < 0 || (Scalar(-2) * a - r2 * b).sign() < 0) continue;
    ++tested;
    CHECK((Scalar(2) * a + Scalar(2) * r2 * b + c).sign() >= 0);
    CHECK((r2 * b + c).sign() >= 0);
    CHECK(c.sign() >= 0);
  }
}

TEST_CASE("q1_minimum lists the negative Pell vectors") {
  CHECK(q1_minimum(30).min_vectors == std::vector<IntVec>{iv(1, 1), iv(7, 5), iv(41, 29)});
  CHECK(q1_minimum(1).min_vectors == std::vector<IntVec>{iv(1, 1)});
  auto m = q1_minimum(169);
  CHECK(m.min_vectors.back() == iv(239, 169));
  CHECK(*m.value == Scalar(1));
  CHECK(m.infinite);
  CHECK_THROWS_AS(q1_minimum(0), InputError);
  // Brute-force oracle up to q <= 500.
  CHECK(brute_min(q1_matrix(), 500) == Scalar(1));
}

TEST_CASE("face_minimum agrees with enumeration") {
  // b > 0 cases are exact and attained.
  for (auto [a, b] : {std::pair{Scalar(-1), Scalar::fraction(1, 4)}, std::pair{Scalar(-3), Scalar(1)},
                      std::pair{Scalar(-2), r2 / Scalar(3)}, std::pair{Scalar(-1), Scalar::fraction(1, 2)}}) {
    SymMatrix q = face_matrix(a, b);
    if (q(1, 1).sign() < 0) continue;
    MinResult m = face_minimum(q);
    REQUIRE(m.status == MinStatus::Attained);
    CHECK(*m.value == brute_min(q, 120));
  }
  MinResult m2 = face_minimum(q2_matrix());
  CHECK(m2.min_vectors == std::vector<IntVec>{iv(0, 1), iv(1, 1)});
  // b < 0: infimum -a - b/sqrt2, approached but not attained.
  SymMatrix q = face_matrix(Scalar(-1), Scalar::fraction(-1, 10));
  MinResult m = face_minimum(q, Scalar(2));
  CHECK(m.status == MinStatus::InfimumNotAttained);
  CHECK(*m.value == Scalar(1) + Scalar::fraction(1, 10) / r2);
  CHECK(brute_min(q, 200) > *m.value);
  REQUIRE(m.witness);
  CHECK(quad_eval(q, *m.witness) < Scalar(2));
  // outside F
  CHECK(face_minimum(face_matrix(Scalar(1), Scalar(0))).status == MinStatus::NegativeUnbounded);
  auto neg = face_minimum(face_matrix(Scalar(0), Scalar(1)));
  CHECK(neg.status == MinStatus::NegativeUnbounded);
  CHECK(quad_eval(face_matrix(Scalar(0), Scalar(1)), *neg.witness).sign() < 0);
  CHECK_THROWS_AS(face_minimum(SymMatrix::identity(2)), InputError);
}

TEST_CASE("boundary rays") {
  CHECK(boundary_ray_min_zero(BoundaryRay::Ray1, Rational(1, 7)) == iv(0, 1));
  CHECK(boundary_ray_min_zero(BoundaryRay::Ray2, Rational(1, 20)) == iv(7, 5));
  CHECK(boundary_ray_min_zero(BoundaryRay::Ray2, Rational(1, 500)) == iv(41, 29));
  SymMatrix g = boundary_ray_generator(BoundaryRay::Ray2);
  CHECK(quad_eval(g, iv(7, 5)) == Scalar(Rational(99), Rational(-70), 2));
  CHECK(quad_eval(g, iv(41, 29)) <= Scalar(Rational(1, 841)));
  CHECK(quad_eval(boundary_ray_generator(BoundaryRay::Ray1), iv(0, 1)).is_zero());
  // Values strictly decrease along successive convergents.
  Scalar prev(1000);
  for (Rational e(1, 2); e > Rational(1, 100000000); e /= 7) {
    IntVec z = boundary_ray_min_zero(BoundaryRay::Ray2, e);
    Scalar v = quad_eval(g, z);
    CHECK(v <= Scalar(e));
    CHECK(v <= prev);
    prev = v;
  }
  CHECK_THROWS_AS(boundary_ray_min_zero(BoundaryRay::Ray2, Rational(0)), InputError);
}

TEST_CASE("interior face minimum bound") {
  Rational l1 = interior_face_min_positive(Scalar(-1), Scalar(0), 200);
  CHECK(l1 > 0);
  CHECK(l1 <= 1);
  Rational l2 = interior_face_min_positive(Scalar(-1), Scalar::fraction(1, 4), 200);
  CHECK(l2 > 0);
  CHECK(brute_min(face_matrix(Scalar(-1), Scalar::fraction(1, 4)), 200) >= Scalar(l2));
  // a >= 0 uses the template bound.
  Rational l3 = interior_face_min_positive(Scalar(1), Scalar(-2), 100);
  CHECK(l3 > 0);
  CHECK_THROWS_AS(interior_face_min_positive(Scalar(-1), r2 / Scalar(2), 50), PreconditionViolated);
  CHECK_THROWS_AS(interior_face_min_positive(Scalar(1), Scalar(0), 50), PreconditionViolated);
}

TEST_CASE("edge and ray checks") { check_report(ryshkov_edge_and_rays_check(60)); }

TEST_CASE("Voronoi insufficiency") { check_report(voronoi_insufficiency_check()); }

TEST_CASE("isotropic boundary check") {
  CHECK(check_isotropic_boundary(q1_matrix(), Cone::sqrt2()));
  CHECK_FALSE(check_isotropic_boundary(SymMatrix::from_rows({{1, -1}, {-1, 1}}), Cone::orthant(2)));
  CHECK(check_isotropic_boundary(SymMatrix::identity(2), Cone::orthant(2)));
  CHECK(check_isotropic_boundary(SymMatrix::from_rows({{0, 1}, {1, 0}}), Cone::orthant(2)));
  CHECK_FALSE(check_isotropic_boundary(SymMatrix::from_rows({{0, 1}, {1, 0}}), Cone::classical(2)));
  CHECK_THROWS_AS(check_isotropic_boundary(SymMatrix::identity(3), Cone::orthant(3)), UnsupportedDimension);
}

TEST_CASE("e-cone evidence") {
  std::vector<Rational> eps = {Rational(1, 10), Rational(1, 20), Rational(1, 40), Rational(1, 80), Rational(1, 160)};
  auto items = e_cone_ir_evidence(Rational(-1), Rational(0), eps);
  REQUIRE(items.size() == 5);
  CHECK(items[0].upper <= Rational(3, 5));
  for (std::size_t i = 0; i < items.size(); ++i) {
    CHECK(items[i].upper <= items[i].target);
    if (i) CHECK(items[i].upper < items[i - 1].upper);
    // Independent check in double precision near e.
    double p = items[i].p.get_d(), q = items[i].q.get_d();
    if (q < 1e7) CHECK(std::abs(-p * p + std::exp(2.0) * q * q - items[i].upper.get_d()) < 1e-3);
  }
  CHECK_THROWS_AS(e_cone_ir_evidence(Rational(1), Rational(0), eps), PreconditionViolated);
}

TEST_CASE("sqrt2 report and figure") {
  auto t0 = std::chrono::steady_clock::now();
  check_report(sqrt2_report(200));
  check_report(e_report({Rational(1, 10), Rational(1, 20)}));
  auto fig = sqrt2_figure();
  CHECK(fig.vertices.size() == 2);
  CHECK(fig.edges.size() == 1);
  CHECK(fig.rays.size() == 2);
  MESSAGE("sqrt2 report took " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s");
}
