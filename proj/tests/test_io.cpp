#include <doctest.h>

#include <random>

#include "perfekt/error.hpp"
#include "perfekt/io.hpp"

using namespace perfekt;

namespace {

template <class T, class F>
void round_trip(const T& x, F from) {
  Json j = to_json(x);
  std::string text = j.dump();
  Json back = parse_json(text);
  CHECK(back == j);
  CHECK(to_json(from(back)).dump() == text);
}

}  // namespace

TEST_CASE("scalar and matrix JSON round-trips bit-exactly") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> num(-99, 99), den(1, 30);
  for (int t = 0; t < 50; ++t) {
    SymMatrix q(3);
    for (int i = 0; i < 3; ++i) {
      for (int j = i; j < 3; ++j) q.set(i, j, Scalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), 2));
    }
    round_trip(q, matrix_from_json);
    CHECK(matrix_from_json(parse_json(to_json(q).dump())) == q);
  }
  CHECK(to_json(q1_matrix()).dump() == R"J({"n":2,"rows":[["-1","0"],["0","2"]]})J");
  CHECK(to_json(q2_matrix())["d"] == 2);
  Integer big("123456789012345678901234567890");
  CHECK(integer_from_json(to_json(big)) == big);
  CHECK(to_json(Integer(7)) == 7);
}

TEST_CASE("cone JSON round-trips") {
  round_trip(Cone::orthant(3), cone_from_json);
  round_trip(Cone::sqrt2(), cone_from_json);
  round_trip(Cone::classical(2), cone_from_json);
  round_trip(Cone::from_generators({{1, 0, 0}, {1, 1, 0}, {1, 1, 1}}), cone_from_json);
  Cone k = cone_from_json(parse_json(R"J({"n": 2, "tag": "orthant"})J"));
  CHECK(k.facets().size() == 2);
  CHECK(cone_from_json(parse_json(R"J({"n": 2, "tag": "sqrt2"})J")).tag() == "sqrt2");
}

TEST_CASE("results and certificates round-trip") {
  Cone k = Cone::orthant(2);
  MinResult m = copositive_minimum(q_an(2), k);
  round_trip(m, min_result_from_json);
  round_trip(q1_minimum(200), min_result_from_json);
  auto v = start_vertex(k);
  round_trip(v, vertex_from_json);
  round_trip(std::vector<RyshkovVertex>{v, v}, vertices_from_json);
  SymMatrix a = SymMatrix::outer(IntVec{1, 2}) + SymMatrix::outer(IntVec{2, 1}) * Scalar(3);
  Certificate c = factorize(a, k);
  REQUIRE(c.kind == CertificateKind::Factorization);
  round_trip(c, certificate_from_json);
  Certificate s = nonmembership_certificate(SymMatrix::from_rows({{1, -1}, {-1, 1}}), k);
  REQUIRE(s.kind == CertificateKind::Separation);
  round_trip(s, certificate_from_json);
  Certificate back = certificate_from_json(parse_json(to_json(s).dump()));
  CHECK(verify_separation(SymMatrix::from_rows({{1, -1}, {-1, 1}}), k, back));
}

TEST_CASE("malformed and inconsistent input is rejected") {
  try {
    parse_json("{\n  \"n\": 2,\n  \"rows\": [[1, 2],, ]\n}");
    FAIL("no error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
  auto mat = [](const char* t) { return matrix_from_json(parse_json(t)); };
  auto cone = [](const char* t) { return cone_from_json(parse_json(t)); };
  const char* bad1 = R"J({"n":2,"rows":[["1","2"],["3","4"]]})J";
  CHECK_THROWS_AS(mat(bad1), InputError);
  const char* bad2 = R"J({"n":2,"rows":[["sqrt(2)","0"],["0","sqrt(3)"]]})J";
  CHECK_THROWS_AS(mat(bad2), FieldMismatch);
  const char* bad3 = R"J({"n":2,"d":3,"rows":[["sqrt(2)","0"],["0","1"]]})J";
  CHECK_THROWS_AS(mat(bad3), FieldMismatch);
  const char* bad4 = R"J({"n":3,"rows":[["1","0"],["0","1"]]})J";
  CHECK_THROWS_AS(mat(bad4), DimensionMismatch);
  const char* bad5 = R"J({"n":1,"rows":[[1.5]]})J";
  CHECK_THROWS_AS(mat(bad5), InputError);
  const char* bad6 = R"J({"rows":[]})J";
  CHECK_THROWS_AS(mat(bad6), InputError);
  const char* bad7 = R"J({"n":2,"generators":[["1","0"],["sqrt(2)","sqrt(3)"]]})J";
  CHECK_THROWS_AS(cone(bad7), FieldMismatch);
}
