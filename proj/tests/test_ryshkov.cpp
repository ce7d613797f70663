#include <doctest.h>

#include "perfekt/error.hpp"
#include "perfekt/ryshkov.hpp"

using namespace perfekt;

namespace {

const Scalar r2 = Scalar::sqrt(2);

SymMatrix half_a2() { return q_an(2) * Scalar::fraction(1, 2); }

}  // namespace

TEST_CASE("voronoi cone rank examples") {
  CHECK(voronoi_cone_rank({{1, 0}, {0, 1}, {1, 1}}) == 3);
  CHECK(voronoi_cone_rank({{1, 1}, {0, 1}}) == 2);
  CHECK(voronoi_cone_rank({{1, 0}}) == 1);
  CHECK(voronoi_cone_rank({{1, 0}, {-1, 0}}) == 1);
}

TEST_CASE("perfectness examples") {
  auto a2 = is_perfect(q_an(2), Cone::orthant(2));
  CHECK(a2.perfect);
  CHECK(a2.rank == 3);
  CHECK(a2.q == half_a2());
  CHECK(a2.rank_witness.size() == 3);
  auto id = is_perfect(SymMatrix::identity(2), Cone::orthant(2));
  CHECK_FALSE(id.perfect);
  CHECK(id.rank == 2);
  Scalar h = Scalar(Rational(1, 2), Rational(1, 4), 2);
  auto q2 = SymMatrix::from_rows({{Scalar(Rational(-1), Rational(-1, 2), 2), h}, {h, Scalar(1)}});
  CHECK_THROWS_AS(is_perfect(q2, Cone::sqrt2()), BoundaryUnsupported);
  auto q2r = is_perfect(q2, Scalar(1), {{0, 1}, {1, 1}});
  CHECK_FALSE(q2r.perfect);
  CHECK(q2r.rank == 2);
}

TEST_CASE("perfectness is invariant under cone symmetries") {
  IntMatrix swap = {{0, 1}, {1, 0}};
  for (const auto& q : {q_an(2), SymMatrix::identity(2), SymMatrix::from_rows({{2, 1}, {1, 3}})}) {
    CHECK(is_perfect(q, Cone::orthant(2)).perfect == is_perfect(congruence(q, swap), Cone::orthant(2)).perfect);
  }
  IntMatrix shear = {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
  auto q3 = q_an(3);
  CHECK(is_perfect(q3, Cone::classical(3)).perfect);
  CHECK(is_perfect(congruence(q3, shear), Cone::classical(3)).perfect);
}

TEST_CASE("edges of the A2 vertex in the classical case") {
  auto v = make_vertex(half_a2(), generic_oracle(Cone::classical(2)));
  CHECK(v.perfect);
  auto edges = vertex_edges(v);
  CHECK(edges.size() == 3);
  for (const auto& d : edges) {
    int tight = 0;
    for (const auto& z : v.min_vectors) {
      CHECK(quad_eval(d, z).sign() >= 0);
      tight += quad_eval(d, z).is_zero();
    }
    CHECK(tight == 4);  // two +- pairs stay tight along an edge
  }
}

TEST_CASE("classical A2 neighbors are equivalent to A2 and the step is involutive") {
  Cone k = Cone::classical(2);
  auto v = make_vertex(half_a2(), generic_oracle(k));
  for (const auto& d : vertex_edges(v)) {
    auto nb = neighbor(v, d, k);
    REQUIRE(std::holds_alternative<RyshkovVertex>(nb.result));
    const auto& w = std::get<RyshkovVertex>(nb.result);
    CHECK(w.perfect);
    CHECK(*copositive_minimum(w.q, k).value == Scalar(1));
    CHECK(determinant(w.q.rows()) == Scalar::fraction(3, 4));
    auto back = neighbor(w, -d, k);
    REQUIRE(std::holds_alternative<RyshkovVertex>(back.result));
    CHECK(std::get<RyshkovVertex>(back.result).q == v.q);
    CHECK(*back.step == *nb.step);
  }
}

TEST_CASE("copositive directions are rays") {
  Cone k = Cone::orthant(2);
  auto v = make_vertex(half_a2(), generic_oracle(k));
  auto nb = neighbor(v, SymMatrix::from_rows({{0, 1}, {1, 0}}), k);
  CHECK(std::holds_alternative<ExtremeRayDirection>(nb.result));
}

TEST_CASE("traversal") {
  Cone cl = Cone::classical(2);
  auto v = make_vertex(half_a2(), generic_oracle(cl));
  std::vector<IntMatrix> gl2 = {{{0, 1}, {1, 0}}, {{1, 1}, {0, 1}}, {{-1, 0}, {0, 1}}};
  auto one_class = traverse(v, cl, 10, gl2);
  CHECK(one_class.vertices.size() == 1);
  CHECK_FALSE(one_class.budget_exhausted);

  auto zero = traverse(v, cl, 0);
  CHECK(zero.vertices.size() == 1);
  CHECK(zero.vertices[0].q == v.q);

  Cone o = Cone::orthant(2);
  auto vo = make_vertex(half_a2(), generic_oracle(o));
  auto t = traverse(vo, o, 5);
  CHECK(t.vertices.size() >= 2);
  for (const auto& w : t.vertices) {
    auto r = copositive_minimum(w.q, o);
    CHECK(*r.value == Scalar(1));
    CHECK(r.min_vectors == w.min_vectors);
    for (const auto& z : w.min_vectors) CHECK(quad_eval(w.q, z) == Scalar(1));
  }
  for (std::size_t i = 1; i < t.vertices.size(); ++i) CHECK(lex_less(t.vertices[i - 1].q, t.vertices[i].q));
  CHECK(traverse(vo, o, 5, {}, {1'000'000, 3}).vertices.size() == t.vertices.size());
}

TEST_CASE("embedding classical perfect forms") {
  CHECK(embed_perfect(q_an(2), Cone::orthant(2)) == q_an(2));
  auto k = Cone::from_generators({{2, 1}, {1, 2}});
  auto e = embed_perfect(q_an(2), k);
  auto p = is_perfect(e, k);
  CHECK(p.perfect);
  CHECK(*copositive_minimum(e, k).value == Scalar(2));
  auto s = embed_perfect(q_an(2), Cone::sqrt2());
  CHECK(is_perfect(s, Cone::sqrt2()).perfect);
  CHECK(*copositive_minimum(s, Cone::sqrt2()).value == Scalar(2));
  auto e3 = embed_perfect(q_an(3), Cone::from_generators({{1, 0, 0}, {1, 1, 0}, {1, 1, 1}}));
  CHECK(e3.dim() == 3);
  CHECK_THROWS_AS(embed_perfect(SymMatrix::identity(2), Cone::orthant(2)), PreconditionViolated);
}
