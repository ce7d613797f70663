#include <doctest.h>

#include <random>

#include "perfekt/cone.hpp"
#include "perfekt/error.hpp"

using namespace perfekt;

namespace {

const Scalar r2 = Scalar::sqrt(2);

// Every facet is valid on all generators and tight on n-1 independent ones.
void check_facets(const std::vector<Vec>& gens, const std::vector<Vec>& facets) {
  int n = static_cast<int>(gens.front().size());
  for (const auto& f : facets) {
    Matrix tight;
    for (const auto& g : gens) {
      int s = dot(f, g).sign();
      CHECK(s >= 0);
      if (s == 0) tight.push_back(g);
    }
    CHECK(rank(tight) == n - 1);
  }
}

}  // namespace

TEST_CASE("preset cones") {
  auto o = Cone::orthant(3);
  CHECK(o.facets().size() == 3);
  CHECK(o.rationally_generated());
  auto s = Cone::sqrt2();
  CHECK_FALSE(s.rationally_generated());
  CHECK(s.field() == 2);
  CHECK(cone_contains(s, IntVec{1, 1}));
  CHECK(cone_contains(s, IntVec{0, 1}));
  CHECK_FALSE(cone_contains(s, IntVec{3, 2}));  // 3 > 2 sqrt2
  CHECK(cone_contains(s, IntVec{7, 5}));
  CHECK(cone_contains(s, Vec{r2, Scalar(1)}));
  CHECK_FALSE(cone_interior(s, Vec{r2, Scalar(1)}));
  auto c = Cone::classical(2);
  CHECK(c.is_whole_space());
  CHECK(cone_contains(c, IntVec{-5, 3}));
}

TEST_CASE("dual facets of the sqrt2 cone") {
  auto f = dual_facets_from_generators({{r2, Scalar(1)}, {Scalar(0), Scalar(1)}});
  REQUIRE(f.size() == 2);
  check_facets({{r2, Scalar(1)}, {Scalar(0), Scalar(1)}}, f);
  bool has_x = false, has_other = false;
  for (const auto& v : f) {
    if (v == Vec{Scalar(1), Scalar(0)}) has_x = true;
    if (v == Vec{Scalar(-1), r2}) has_other = true;
  }
  CHECK(has_x);
  CHECK(has_other);
}

TEST_CASE("dual facets of a rational 2d cone") {
  auto k = Cone::from_generators({{1, 0}, {1, 2}});
  auto f = k.facets();
  std::sort(f.begin(), f.end(), [](const Vec& x, const Vec& y) { return x[0] < y[0]; });
  CHECK(f == std::vector<Vec>{{0, 1}, {2, -1}});
}

TEST_CASE("dual facets oracle on random 3d and 4d cones") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> coord(-3, 3);
  int built = 0;
  for (int n : {3, 4}) {
    for (int t = 0; t < 60; ++t) {
      // Generators on the affine slice x_n = 4; extreme-ness is validated.
      std::vector<Vec> gens;
      for (int i = 0; i < n + 2; ++i) {
        Vec g(n);
        for (int c = 0; c < n - 1; ++c) g[c] = coord(rng);
        g[n - 1] = 4;
        gens.push_back(g);
      }
      std::optional<Cone> k;
      try {
        k = Cone::from_generators(gens);
      } catch (const InputError&) {
        continue;
      }
      ++built;
      check_facets(k->generators(), k->facets());
      std::uniform_int_distribution<int> w(0, 4);
      for (int s = 0; s < 20; ++s) {
        Vec x(n);
        for (const auto& g : k->generators()) {
          Scalar ws(w(rng));
          for (int i = 0; i < n; ++i) x[i] = x[i] + ws * g[i];
        }
        CHECK(cone_contains(*k, x));
      }
      Vec below(n);
      below[n - 1] = -1;
      CHECK_FALSE(cone_contains(*k, below));
    }
  }
  CHECK(built >= 10);
}

TEST_CASE("lattice basis examples") {
  CHECK(lattice_basis_in_cone(Cone::orthant(2)) == std::vector<IntVec>{{1, 0}, {0, 1}});
  CHECK(lattice_basis_in_cone(Cone::sqrt2()) == std::vector<IntVec>{{0, 1}, {1, 1}});
  auto k = Cone::from_generators({{2, 1}, {1, 2}});
  CHECK(lattice_basis_in_cone(k) == std::vector<IntVec>{{1, 1}, {2, 1}});
}

TEST_CASE("lattice basis oracle: unimodular and inside K") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> coord(1, 5);
  for (int t = 0; t < 20; ++t) {
    int n = 2 + t % 2;
    std::vector<Vec> gens;
    while (true) {
      gens.clear();
      for (int i = 0; i < n; ++i) {
        Vec g(n);
        for (auto& x : g) x = coord(rng);
        gens.push_back(g);
      }
      if (rank(gens) == n) break;
    }
    auto k = Cone::from_generators(gens);
    auto b = lattice_basis_in_cone(k);
    REQUIRE(static_cast<int>(b.size()) == n);
    CHECK(abs(determinant(columns(b))) == 1);
    for (const auto& v : b) CHECK(cone_contains(k, v));
  }
}

TEST_CASE("rationally generated cones require integer generators") {
  CHECK_THROWS_AS(Cone::from_generators({{r2, Scalar(1)}, {Scalar(0), Scalar(1)}}, true), InputError);
  CHECK_THROWS_AS(Cone::from_generators({{1, 0}, {2, 0}}), InputError);
  CHECK_THROWS_AS(Cone::from_representation({{1, 0}, {0, 1}}, {{1, 0}, {1, 1}}, true), InputError);
  CHECK_NOTHROW(Cone::from_representation({{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}, true));
}

TEST_CASE("irrationality status") {
  CHECK(std::holds_alternative<GuaranteedIR>(ir_status(Cone::orthant(2))));
  auto s = ir_status(Cone::sqrt2());
  REQUIRE(std::holds_alternative<KnownNonIR>(s));
  CHECK(std::get<KnownNonIR>(s).witness == SymMatrix::from_rows({{-1, 0}, {0, 2}}));
  CHECK(ir_status_name(s) == "KnownNonIR");
}

TEST_CASE("simplicial decomposition covers the cone") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> coord(0, 3);
  std::vector<Vec> gens = {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}};
  auto k = Cone::from_generators(gens);
  auto pieces = simplicial_decomposition(k);
  CHECK(pieces.size() == 2);
  for (const auto& p : pieces) {
    Matrix m;
    for (int i : p.generators) m.push_back(k.generators()[i]);
    CHECK(rank(m) == 3);
  }
  for (int s = 0; s < 50; ++s) {
    Vec x(3);
    for (const auto& g : k.generators()) {
      Scalar w(coord(rng));
      for (int i = 0; i < 3; ++i) x[i] = x[i] + w * g[i];
    }
    bool covered = false;
    for (const auto& p : pieces) {
      Matrix cols(3, Vec(3));
      for (int c = 0; c < 3; ++c) {
        for (int r = 0; r < 3; ++r) cols[r][c] = k.generators()[p.generators[c]][r];
      }
      auto lam = solve(cols, x);
      if (lam && std::all_of(lam->begin(), lam->end(), [](const Scalar& v) { return v.sign() >= 0; })) covered = true;
    }
    CHECK(covered);
  }
  CHECK(simplicial_decomposition(Cone::classical(2)).size() == 4);
  CHECK(simplicial_decomposition(Cone::orthant(3)).size() == 1);
}
