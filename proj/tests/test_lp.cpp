#include <doctest.h>

#include <random>

#include "perfekt/lp.hpp"

using namespace perfekt;

namespace {

// Best objective over all basic points of a 2-variable LP (vertex oracle).
std::optional<Scalar> vertex_oracle(const LPProblem& p) {
  std::vector<std::pair<Vec, Scalar>> lines;
  for (std::size_t i = 0; i < p.a.size(); ++i) lines.push_back({p.a[i], p.b[i]});
  lines.push_back({{1, 0}, Scalar(0)});
  lines.push_back({{0, 1}, Scalar(0)});
  std::optional<Scalar> best;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      auto x = solve({lines[i].first, lines[j].first}, {lines[i].second, lines[j].second});
      if (!x || !verify_feasible(p, *x)) continue;
      Scalar v = dot(p.c, *x);
      if (!best || (p.maximize ? v > *best : v < *best)) best = v;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("lp examples") {
  LPProblem p;
  p.a = {{1}};
  p.sense = {Sense::LessEq};
  p.b = {1};
  p.c = {0};
  auto r = lp_solve(p);
  CHECK(r.status == LPStatus::Optimal);
  CHECK(r.value == Scalar(0));

  p.a = {{1}, {1}};
  p.sense = {Sense::GreaterEq, Sense::LessEq};
  p.b = {1, 0};
  r = lp_solve(p);
  REQUIRE(r.status == LPStatus::Infeasible);
  CHECK(verify_farkas(p, r.farkas));

  p.a = {{1, -1}};
  p.sense = {Sense::LessEq};
  p.b = {1};
  p.c = {1, 1};
  r = lp_solve(p);
  REQUIRE(r.status == LPStatus::Unbounded);
  CHECK(verify_ray(p, r.ray));
}

TEST_CASE("lp with quadratic-field data") {
  Scalar r2 = Scalar::sqrt(2);
  LPProblem p;
  p.a = {{r2, Scalar(1)}};
  p.sense = {Sense::LessEq};
  p.b = {Scalar(2)};
  p.c = {Scalar(1), Scalar(1)};
  auto r = lp_solve(p);
  REQUIRE(r.status == LPStatus::Optimal);
  CHECK(r.value == Scalar(2));  // at (0, 2) since sqrt2 > 1
}

TEST_CASE("redundant equality rows are handled") {
  LPProblem p;
  p.a = {{1, 1}, {2, 2}, {1, 0}};
  p.sense = {Sense::Equal, Sense::Equal, Sense::LessEq};
  p.b = {3, 6, 1};
  p.c = {1, 0};
  p.maximize = false;
  auto r = lp_solve(p);
  REQUIRE(r.status == LPStatus::Optimal);
  CHECK(r.value == Scalar(0));
  CHECK(r.x[1] == Scalar(3));
}

TEST_CASE("random lps agree with the vertex oracle and certificates verify") {
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<int> e(-5, 5);
  int optimal = 0, infeasible = 0, unbounded = 0;
  for (int t = 0; t < 400; ++t) {
    LPProblem p;
    int m = 1 + t % 4;
    for (int i = 0; i < m; ++i) {
      p.a.push_back({Scalar(e(rng)), Scalar(e(rng))});
      p.b.push_back(Scalar(e(rng)));
      p.sense.push_back(static_cast<Sense>(rng() % 3));
    }
    p.c = {Scalar(e(rng)), Scalar(e(rng))};
    p.maximize = rng() % 2;
    auto r = lp_solve(p);
    auto oracle = vertex_oracle(p);
    switch (r.status) {
      case LPStatus::Optimal:
        ++optimal;
        CHECK(verify_feasible(p, r.x));
        REQUIRE(oracle);
        CHECK(r.value == *oracle);
        break;
      case LPStatus::Infeasible:
        ++infeasible;
        CHECK(verify_farkas(p, r.farkas));
        CHECK_FALSE(oracle);
        break;
      case LPStatus::Unbounded:
        ++unbounded;
        CHECK(verify_ray(p, r.ray));
        break;
    }
  }
  CHECK(optimal > 50);
  CHECK(infeasible > 20);
  CHECK(unbounded > 20);
}
