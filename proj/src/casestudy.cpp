#include "perfekt/casestudy.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "perfekt/error.hpp"
#include "perfekt/numtheory.hpp"

namespace perfekt {

namespace {

const Scalar& s2() {
  static const Scalar v = Scalar::sqrt(2);
  return v;
}

IntVec iv(long p, long q) { return {Integer(p), Integer(q)}; }

// Every nonzero integer point (p, q) of the sqrt2 cone with q <= bound.
template <class F>
void for_each_cone_point(long bound, F f) {
  for (long q = 1; q <= bound; ++q) {
    long pmax = (s2() * Scalar(q)).floor().get_si();
    for (long p = 0; p <= pmax; ++p) f(p, q);
  }
}

const std::vector<std::pair<Integer, Integer>>& pell_table() {
  static const auto t = pell_negative_solutions(120);
  return t;
}

std::vector<IntVec> pell_upto(long bound) {
  std::vector<IntVec> out;
  for (const auto& [p, q] : pell_table()) {
    if (q > bound) break;
    if (p * p - 2 * q * q != -1) throw Error("negative Pell identity fails at " + to_string(p));
    out.push_back({p, q});
  }
  return out;
}

struct FaceParams {
  Scalar a, b, c;
};

FaceParams face_params(const SymMatrix& q) {
  if (q.dim() != 2) throw DimensionMismatch("face matrices are 2 x 2");
  int f = q.field();
  if (f != 0 && f != 2) throw FieldMismatch("face matrices live over Q(sqrt2)");
  FaceParams fp{q(0, 0), q(0, 1), q(1, 1)};
  if (fp.c != Scalar(-2) * fp.a - Scalar(2) * s2() * fp.b) {
    throw InputError("matrix is not isotropic on (sqrt2, 1): " + q.str());
  }
  return fp;
}

std::string vec_list(const std::vector<IntVec>& vs) {
  std::string s;
  for (const auto& v : vs) s += (s.empty() ? "" : " ") + str(v);
  return s;
}

// Largest dyadic rational below a positive quadratic irrational, fine enough
// to stay close to it.
Rational rational_below(const Scalar& x) {
  if (x.is_rational()) return x.as_rational();
  for (Integer den = Integer(1) << 20;; den *= 2) {
    Integer f = (x * Scalar(den)).floor();
    if (f > 0) {
      Rational r(f, den);
      r.canonicalize();
      return r;
    }
  }
}

CheckItem run_item(const std::string& key, const std::function<std::pair<bool, std::string>()>& f) {
  try {
    auto [ok, detail] = f();
    return {key, ok, detail};
  } catch (const std::exception& e) {
    return {key, false, std::string("error: ") + e.what()};
  }
}

}  // namespace

bool all_pass(const Report& r) {
  return std::all_of(r.begin(), r.end(), [](const CheckItem& i) { return i.pass; });
}

SymMatrix face_matrix(const Scalar& a, const Scalar& b) {
  SymMatrix q(2);
  q.set(0, 0, a);
  q.set(0, 1, b);
  q.set(1, 1, Scalar(-2) * a - Scalar(2) * s2() * b);
  return q;
}

SymMatrix q1_matrix() { return face_matrix(Scalar(-1), Scalar(0)); }

SymMatrix q2_matrix() {
  return face_matrix(Scalar(Rational(-1), Rational(-1, 2), 2), Scalar(Rational(1, 2), Rational(1, 4), 2));
}

SymMatrix q1_q2_edge_direction() {
  SymMatrix d(2);
  d.set(0, 0, Scalar(Rational(2), Rational(-2), 2));
  d.set(0, 1, Scalar(1));
  d.set(1, 1, Scalar(Rational(-4), Rational(2), 2));
  return d;
}

Scalar q1_q2_edge_length() { return Scalar(Rational(1, 2), Rational(1, 4), 2); }

MinResult face_minimum(const SymMatrix& q, const Scalar& below, long pell_bound) {
  auto [a, b, c] = face_params(q);
  MinResult res;
  // Q[(p,q)] = (2q^2 - p^2) h(p/q) with h(r) = (-ar - a sqrt2 - 2b) / (r + sqrt2);
  // h runs from c/2 at r = 0 to hs at r = sqrt2 and is monotone with the sign of b.
  const Scalar hs = -a - b / s2();
  auto pell_below = [&](const Scalar& level) -> IntVec {
    for (const auto& [p, r] : pell_table()) {
      IntVec z{p, r};
      if (quad_eval(q, z) < level) return z;
    }
    throw Error("no negative Pell vector below " + level.str());
  };
  if (c.sign() < 0) {
    res.status = MinStatus::NegativeUnbounded;
    res.witness = iv(0, 1);
    return res;
  }
  if (hs.sign() < 0) {
    res.status = MinStatus::NegativeUnbounded;
    res.witness = pell_below(Scalar(0));
    return res;
  }
  if (b.sign() < 0) {
    // Values decrease to hs along the Pell vectors and never reach it.
    res.status = hs.is_zero() ? MinStatus::InfimumZeroNotAttained : MinStatus::InfimumNotAttained;
    res.value = hs;
    if (hs < below) res.witness = pell_below(below);
    return res;
  }
  res.status = MinStatus::Attained;
  if (b.is_zero()) {
    res.value = -a;
    res.infinite = true;
    if (a.is_zero()) {
      res.min_vectors = {iv(0, 1), iv(1, 1)};
    } else {
      // Q = -a (2q^2 - p^2); the minimum sits exactly on 2q^2 - p^2 = 1.
      res.min_vectors = pell_upto(pell_bound);
    }
    return res;
  }
  if (c.is_zero()) {
    res.value = Scalar(0);
    res.min_vectors = {iv(0, 1)};
    return res;
  }
  // b > 0: h increases. (p,q) -> (3p - 4q, 3q - 2p) keeps 2q^2 - p^2 and lowers
  // the slope whenever p/q >= 4/3, so minimizers have p/q < 4/3 and then
  // q^2 < 9k/2. Values above the seed need k <= seed / h(0).
  Scalar seed = std::min(c, quad_eval(q, iv(1, 1)));
  Integer kmax = (seed / (c / Scalar(2))).floor();
  long n = ceil_sqrt(Scalar(kmax) * Scalar::fraction(9, 2)).get_si();
  std::optional<Scalar> best;
  for_each_cone_point(std::max(n, 1L), [&](long p, long r) {
    IntVec z = iv(p, r);
    Scalar v = quad_eval(q, z);
    if (!best || v < *best) {
      best = v;
      res.min_vectors.clear();
    }
    if (v == *best) res.min_vectors.push_back(z);
  });
  res.value = *best;
  std::sort(res.min_vectors.begin(), res.min_vectors.end());
  return res;
}

MinOracle face_oracle(long pell_bound) {
  return [pell_bound](const SymMatrix& q, const Scalar& below) { return face_minimum(q, below, pell_bound); };
}

MinResult q1_minimum(long bound) {
  if (bound < 1) throw InputError("bound must be positive");
  MinResult res;
  res.status = MinStatus::Attained;
  res.value = Scalar(1);
  // Q1[(p,q)] = 2q^2 - p^2 is a nonzero integer on K (p/q = sqrt2 is impossible)
  // and positive there, so it is >= 1 with equality on the negative Pell vectors.
  res.min_vectors = pell_upto(bound);
  res.infinite = true;
  return res;
}

SymMatrix boundary_ray_generator(BoundaryRay which) {
  if (which == BoundaryRay::Ray1) return face_matrix(-s2(), Scalar(1));
  return face_matrix(Scalar(1), -s2());
}

IntVec boundary_ray_min_zero(BoundaryRay which, const Rational& eps) {
  if (sgn(eps) <= 0) throw InputError("eps must be positive");
  if (which == BoundaryRay::Ray1) return iv(0, 1);
  SymMatrix q = boundary_ray_generator(which);
  // Q[(p,q)] = (p - sqrt2 q)^2 <= 1/q^2 on the convergents below sqrt2.
  for (const auto& [p, r] : pell_table()) {
    IntVec z{p, r};
    if (quad_eval(q, z) <= Scalar(eps)) return z;
  }
  throw Error("eps below the precomputed convergent range");
}

Rational interior_face_min_positive(const Scalar& a, const Scalar& b, long bound) {
  SymMatrix q = face_matrix(a, b);
  // Q[(p,q)] = q^2 (sqrt2 - r) G(r), r = p/q, G(r) = -ar - a sqrt2 - 2b linear.
  auto g = [&](const Scalar& r) { return -a * r - a * s2() - Scalar(2) * b; };
  const Scalar half_s2 = s2() / Scalar(2);
  const Scalar g0 = g(Scalar(0)), gm = g(half_s2), gs = g(s2());
  if (g0.sign() <= 0 || gs.sign() <= 0) {
    throw PreconditionViolated("(a, b) is not in the relative interior of the face");
  }
  // Compact arc r <= sqrt2/2: sqrt2 - r >= sqrt2/2 and q >= 1.
  Scalar bound_arc = half_s2 * std::min(g0, gm);
  // Near sqrt2: q^2 (sqrt2 - r) = (2q^2 - p^2) / (sqrt2 + r) >= C = sqrt2/4.
  const Scalar cc = s2() / Scalar(4);
  Scalar bound_near;
  if (a.sign() < 0) {
    // With x = q^2 (sqrt2 - r): Q = x G(sqrt2) + a x^2 / q^2, concave in x on
    // [C, q^2 sqrt2/2], so it is >= min(G(sqrt2) C + a C^2/q^2, (sqrt2/2) G(sqrt2/2)).
    // Past N the first term stays >= G(sqrt2) C / 2; below N enumerate.
    long n = std::max<long>(1, ceil_sqrt(Scalar(-2) * a * cc / gs).get_si());
    bound_near = std::min(gs * cc + a * cc * cc / Scalar(n * n), half_s2 * gm);
    for (long r = 1; r < n; ++r) {
      for_each_cone_point(r, [&](long p, long rr) {
        if (rr != r || Scalar(2 * p * p) <= Scalar(r * r)) return;
        bound_near = std::min(bound_near, quad_eval(q, iv(p, r)));
      });
    }
  } else {
    // G is nonincreasing, so G(r) >= G(sqrt2) on the arc.
    bound_near = cc * std::min(gm, gs);
  }
  Rational l = rational_below(std::min(bound_arc, bound_near));
  std::optional<Scalar> seen;
  for_each_cone_point(bound, [&](long p, long r) {
    Scalar v = quad_eval(q, iv(p, r));
    if (!seen || v < *seen) seen = v;
  });
  if (seen && *seen < Scalar(l)) {
    throw Error("lower bound " + to_string(l) + " exceeds enumerated value " + seen->str());
  }
  return l;
}

Report ryshkov_edge_and_rays_check(long bound) {
  Report rep;
  const SymMatrix q1 = q1_matrix(), q2 = q2_matrix(), d = q1_q2_edge_direction();
  const Scalar lam = q1_q2_edge_length();
  const IntVec v11 = iv(1, 1), v01 = iv(0, 1);
  const Cone k = Cone::sqrt2();
  const MinOracle oracle = face_oracle();

  rep.push_back(run_item("sqrt2/edge-tight", [&]() -> std::pair<bool, std::string> {
    if (!quad_eval(d, v11).is_zero() || quad_eval(q1, v11) != Scalar(1)) return {false, "D[(1,1)] != 0"};
    for (int i = 0; i <= 16; ++i) {
      Scalar l = lam * Scalar::fraction(i, 16);
      if (quad_eval(q1 + d * l, v11) != Scalar(1)) return {false, "Q[(1,1)] != 1 at lambda = " + l.str()};
    }
    if (quad_eval(q1 + d * Scalar::fraction(1, 2), v11) != Scalar(1)) return {false, "fails at lambda = 1/2"};
    return {true, "Q[(1,1)] = 1 on Q1 + lambda D, lambda in [0, " + lam.str() + "]"};
  }));

  rep.push_back(run_item("sqrt2/edge-endpoint", [&]() -> std::pair<bool, std::string> {
    SymMatrix e = q1 + d * lam;
    if (e != q2) return {false, "Q1 + lambda* D = " + e.str()};
    auto v2 = make_vertex(q2, oracle);
    auto back = neighbor(v2, -d, k, oracle);
    auto* w = std::get_if<RyshkovVertex>(&back.result);
    if (!w || w->q != q1 || *back.step != lam) return {false, "neighbor of Q2 along -D is not Q1"};
    auto v1 = make_vertex(q1, oracle);
    auto fwd = neighbor(v1, d, k, oracle);
    auto* w2 = std::get_if<RyshkovVertex>(&fwd.result);
    if (!w2 || w2->q != q2 || *fwd.step != lam) return {false, "neighbor of Q1 along D is not Q2"};
    return {true, "Q1 + (" + lam.str() + ") D = Q2; neighbor steps agree both ways"};
  }));

  rep.push_back(run_item("sqrt2/ray-q1", [&]() -> std::pair<bool, std::string> {
    SymMatrix r = boundary_ray_generator(BoundaryRay::Ray2);
    if (is_K_copositive(r, k).kind == Copositivity::NotCopositive) return {false, "ray direction not copositive"};
    const Scalar lams[] = {Scalar::fraction(1, 10), Scalar::fraction(1, 2), Scalar(1), Scalar(10), Scalar(100)};
    std::string bad;
    for (const auto& l : lams) {
      SymMatrix ql = q1 + r * l;
      for_each_cone_point(bound, [&](long p, long qq) {
        if (!bad.empty()) return;
        IntVec z = iv(p, qq);
        Scalar gap = s2() * Scalar(qq) - Scalar(p);
        Scalar v = quad_eval(ql, z);
        if (v != quad_eval(q1, z) + l * gap * gap || v <= Scalar(1)) bad = str(z) + " at lambda " + l.str();
      });
    }
    if (!bad.empty()) return {false, "new tight or low vector " + bad};
    Scalar at75 = quad_eval(q1 + r * Scalar(10), iv(7, 5));
    if (at75 != Scalar(1) + Scalar(10) * (Scalar(Rational(-7), Rational(5), 2) * Scalar(Rational(-7), Rational(5), 2))) {
      return {false, "value at (7,5) differs"};
    }
    auto nb = neighbor(make_vertex(q1, oracle), r, k, oracle);
    if (!std::holds_alternative<ExtremeRayDirection>(nb.result)) return {false, "neighbor found a vertex"};
    return {true, "Q1 + lambda R > 1 on K cap Z^2, q <= " + std::to_string(bound) + "; (7,5) at 10: " + at75.str()};
  }));

  rep.push_back(run_item("sqrt2/ray-q2", [&]() -> std::pair<bool, std::string> {
    SymMatrix r = q2_ray_direction();
    if (!quad_eval(r, v01).is_zero() || quad_eval(q2, v01) != Scalar(1)) return {false, "Q[(0,1)] not constant 1"};
    if (!quad_eval(r, Vec{s2(), Scalar(1)}).is_zero()) return {false, "direction leaves the face"};
    if (is_K_copositive(r, k).kind == Copositivity::NotCopositive) return {false, "ray direction not copositive"};
    for (const auto& mu : {Scalar::fraction(1, 2), Scalar(1), Scalar(10)}) {
      MinResult m = face_minimum(q2 + r * mu);
      if (m.status != MinStatus::Attained || *m.value != Scalar(1) ||
          std::find(m.min_vectors.begin(), m.min_vectors.end(), v01) == m.min_vectors.end()) {
        return {false, "minimum is not 1 at (0,1) for mu = " + mu.str()};
      }
    }
    auto nb = neighbor(make_vertex(q2, oracle), r, k, oracle);
    if (!std::holds_alternative<ExtremeRayDirection>(nb.result)) return {false, "neighbor found a vertex"};
    return {true, "Q[(0,1)] = 1 on Q2 + mu " + r.str()};
  }));
  return rep;
}

SymMatrix q2_ray_direction() {
  SymMatrix r(2);
  r.set(0, 0, Scalar(-1));
  r.set(0, 1, s2() / Scalar(2));
  r.set(1, 1, Scalar(0));
  return r;
}

Report voronoi_insufficiency_check() {
  Report rep;
  const SymMatrix q1 = q1_matrix(), q2 = q2_matrix();
  const Vec iso = {s2(), Scalar(1)};
  const SymMatrix a = SymMatrix::outer(iso) + SymMatrix::outer(iv(1, 1));
  auto resum = [&](const Membership& m) {
    SymMatrix s(2);
    for (std::size_t i = 0; i < m.generators.size(); ++i) s += SymMatrix::outer(m.generators[i]) * m.coefficients[i];
    return s == a;
  };
  rep.push_back(run_item("sqrt2/voronoi-inner", [&]() -> std::pair<bool, std::string> {
    Scalar x = frobenius(a, q1), y = frobenius(a, q2);
    return {x == y && x == Scalar(1), "<A,Q1> = " + x.str() + ", <A,Q2> = " + y.str()};
  }));
  rep.push_back(run_item("sqrt2/voronoi-q2", [&]() -> std::pair<bool, std::string> {
    std::vector<IntVec> mv = {iv(1, 1), iv(0, 1)};
    Membership m = voronoi_membership(a, mv);
    if (m.inside) return {false, "A lies in V(Q2)"};
    bool ok = frobenius(m.separator, a).sign() < 0;
    for (const auto& v : mv) ok = ok && frobenius(m.separator, SymMatrix::outer(v)).sign() >= 0;
    return {ok, "A outside V(Q2), separator " + m.separator.str()};
  }));
  rep.push_back(run_item("sqrt2/extended-q2", [&]() -> std::pair<bool, std::string> {
    Membership m = voronoi_membership(a, {iv(1, 1), iv(0, 1)}, {iso});
    if (!m.inside) return {false, "A outside eV(Q2)"};
    bool expected = m.coefficients == Vec{Scalar(1), Scalar(1), Scalar(0)};
    return {resum(m) && expected, "coefficients " + str(m.coefficients)};
  }));
  rep.push_back(run_item("sqrt2/extended-q1", [&]() -> std::pair<bool, std::string> {
    Membership m = voronoi_membership(a, q1_minimum(30).min_vectors, {iso});
    if (!m.inside) return {false, "A outside eV(Q1)"};
    return {resum(m), "coefficients " + str(m.coefficients)};
  }));
  return rep;
}

namespace {

struct Interval {
  Rational lo, hi;
};

Interval operator+(const Interval& x, const Interval& y) { return {x.lo + y.lo, x.hi + y.hi}; }

Interval operator*(const Interval& x, const Interval& y) {
  Rational c[] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Interval point(const Rational& r) { return {r, r}; }

// Convergents of e at indices depth and depth + 1 bracket e.
Interval e_sandwich(int depth) {
  auto cs = convergents(cf_of_e(depth + 1), depth + 2);
  Rational x(cs[depth].p, cs[depth].q), y(cs[depth + 1].p, cs[depth + 1].q);
  x.canonicalize();
  y.canonicalize();
  return x < y ? Interval{x, y} : Interval{y, x};
}

}  // namespace

std::vector<EEvidenceItem> e_cone_ir_evidence(const Rational& a, const Rational& b, const std::vector<Rational>& eps) {
  for (const auto& x : eps) {
    if (sgn(x) <= 0) throw InputError("eps must be positive");
  }
  for (int depth = 48; depth <= 3072; depth *= 2) {
    Interval e = e_sandwich(depth);
    // Interior of the e-face: c = -a e^2 - 2b e > 0 and -2ae - 2b > 0.
    Interval c = point(-a) * e * e + point(-2 * b) * e;
    Interval g = point(-2 * a) * e + point(-2 * b);
    if (c.hi <= 0 || g.hi <= 0) throw PreconditionViolated("(a, b) is not in the interior of the e-face");
    if (c.lo <= 0 || g.lo <= 0) continue;
    auto cs = convergents(cf_of_e(depth - 1), depth);
    std::vector<EEvidenceItem> out;
    std::size_t next = 0;
    bool exhausted = false;
    for (const auto& x : eps) {
      bool found = false;
      // Even indices give convergents below e; depth leaves room for the sandwich.
      for (; next + 8 < cs.size() && !found; ++next) {
        if (cs[next].index % 2 != 0) continue;
        const Integer &p = cs[next].p, &q = cs[next].q;
        Rational pq = p * q, pp = p * p, qq = q * q;
        Interval val = point(a * pp + 2 * b * pq) + point(qq) * c;
        Rational x2q(x * x / qq);
        Interval target = g * point(x) + point(a * x2q);
        if (val.hi > target.lo) continue;
        if (!out.empty() && val.hi >= out.back().upper) continue;
        out.push_back({x, p, q, val.hi, target.lo});
        found = true;
      }
      if (!found) {
        exhausted = true;
        break;
      }
    }
    if (!exhausted) return out;
  }
  throw Error("sandwich precision exhausted");
}

bool check_isotropic_boundary(const SymMatrix& q, const Cone& k) {
  if (q.dim() != 2 || k.dim() != 2) throw UnsupportedDimension("isotropic boundary check is implemented for n = 2");
  if (k.is_whole_space()) {
    // Every nonzero vector is interior; only definite forms have none isotropic.
    return determinant(q.rows()).sign() > 0;
  }
  const auto& g = k.generators();
  // x = g1 + r g2, r >= 0, covers K apart from the boundary ray g2.
  Scalar A = quad_eval(q, g[0]), B = bilinear(q, g[0], g[1]), C = quad_eval(q, g[1]);
  if (C.is_zero()) {
    if (B.is_zero()) return !A.is_zero();
    return (-A / (Scalar(2) * B)).sign() <= 0;
  }
  if (A.is_zero()) return (Scalar(-2) * B / C).sign() <= 0;
  Scalar disc = B * B - A * C;
  if (disc.sign() < 0) return true;
  if (disc.is_zero()) return (-B / C).sign() <= 0;
  if ((A / C).sign() < 0) return false;
  return (-B / C).sign() <= 0;
}

Sqrt2Figure sqrt2_figure() {
  Sqrt2Figure fig;
  const MinOracle oracle = face_oracle(30);
  auto v1 = make_vertex(q1_matrix(), oracle);
  auto v2 = make_vertex(q2_matrix(), oracle);
  fig.vertices.push_back({"Q1", v1.q, v1.min_vectors, v1.infinite, true});
  fig.vertices.push_back({"Q2", v2.q, v2.min_vectors, v2.infinite, v2.perfect});
  fig.edges.push_back({"Q1", "Q2", q1_q2_edge_direction(), q1_q2_edge_length(), {iv(1, 1)}});
  fig.rays.push_back({"Q1", boundary_ray_generator(BoundaryRay::Ray2), {}});
  fig.rays.push_back({"Q2", q2_ray_direction(), {iv(0, 1)}});
  return fig;
}

Report sqrt2_report(long bound) {
  Report rep;
  const SymMatrix q1 = q1_matrix(), q2 = q2_matrix();
  const Cone k = Cone::sqrt2();

  rep.push_back(run_item("sqrt2/q1-minimum", [&]() -> std::pair<bool, std::string> {
    MinResult m = q1_minimum(30);
    bool ok = m.min_vectors == std::vector<IntVec>{iv(1, 1), iv(7, 5), iv(41, 29)};
    auto pell = pell_upto(bound);
    std::vector<IntVec> ones;
    for_each_cone_point(bound, [&](long p, long r) {
      Scalar v = quad_eval(q1, iv(p, r));
      if (!v.is_integer() || v < Scalar(1)) ok = false;
      if (v == Scalar(1)) ones.push_back(iv(p, r));
    });
    ok = ok && ones == pell;
    return {ok, "minimum 1, minimal vectors q <= 30: " + vec_list(m.min_vectors) + "; exhaustive to q <= " +
                    std::to_string(bound) + " finds " + std::to_string(ones.size()) + " Pell vectors"};
  }));

  rep.push_back(run_item("sqrt2/q1-perfect", [&]() -> std::pair<bool, std::string> {
    bool generic_declines = false;
    try {
      is_perfect(q1, k);
    } catch (const BoundaryUnsupported&) {
      generic_declines = true;
    }
    PerfectResult pr = is_perfect(q1, Scalar(1), q1_minimum(30).min_vectors);
    return {generic_declines && pr.perfect && pr.rank == 3,
            "rank 3 from the analytic Pell minimal vectors; generic procedure declines (boundary)"};
  }));

  rep.push_back(run_item("sqrt2/q2-vertex", [&]() -> std::pair<bool, std::string> {
    bool ok = quad_eval(q2, iv(1, 1)) == Scalar(1) && quad_eval(q2, iv(0, 1)) == Scalar(1);
    MinResult m = face_minimum(q2);
    ok = ok && m.status == MinStatus::Attained && *m.value == Scalar(1) &&
         m.min_vectors == std::vector<IntVec>{iv(0, 1), iv(1, 1)};
    int r = voronoi_cone_rank(m.min_vectors);
    ok = ok && r == 2 && !is_perfect(q2, Scalar(1), m.min_vectors).perfect;
    return {ok, "minimum 1 at " + vec_list(m.min_vectors) + ", Voronoi rank " + std::to_string(r) + " < 3"};
  }));

  for (auto& i : ryshkov_edge_and_rays_check(std::min(bound, 100L))) rep.push_back(i);
  for (auto& i : voronoi_insufficiency_check()) rep.push_back(i);

  rep.push_back(run_item("sqrt2/boundary-rays", [&]() -> std::pair<bool, std::string> {
    SymMatrix r1 = boundary_ray_generator(BoundaryRay::Ray1), r2 = boundary_ray_generator(BoundaryRay::Ray2);
    IntVec z1 = boundary_ray_min_zero(BoundaryRay::Ray1, Rational(1, 100));
    IntVec a = boundary_ray_min_zero(BoundaryRay::Ray2, Rational(1, 20));
    IntVec b = boundary_ray_min_zero(BoundaryRay::Ray2, Rational(1, 500));
    bool ok = z1 == iv(0, 1) && quad_eval(r1, z1).is_zero() && a == iv(7, 5) && b == iv(41, 29) &&
              quad_eval(r2, b) <= Scalar(Rational(1, 841));
    MinResult m1 = face_minimum(r1), m2 = face_minimum(r2);
    ok = ok && m1.status == MinStatus::Attained && m1.value->is_zero() &&
         m2.status == MinStatus::InfimumZeroNotAttained;
    return {ok, "Ray1 zero at (0,1); Ray2 below 1/500 at (41,29) with value " + quad_eval(r2, b).str()};
  }));

  rep.push_back(run_item("sqrt2/interior", [&]() -> std::pair<bool, std::string> {
    long eb = std::min(bound, 200L);
    Rational l1 = interior_face_min_positive(Scalar(-1), Scalar(0), eb);
    Rational l2 = interior_face_min_positive(Scalar(-1), Scalar::fraction(1, 4), eb);
    bool refused = false;
    try {
      interior_face_min_positive(Scalar(-1), s2() / Scalar(2), eb);
    } catch (const PreconditionViolated&) {
      refused = true;
    }
    return {sgn(l1) > 0 && l1 <= 1 && sgn(l2) > 0 && refused,
            "L(-1,0) = " + to_string(l1) + ", L(-1,1/4) = " + to_string(l2) + "; boundary point refused"};
  }));

  rep.push_back(run_item("sqrt2/isotropic-boundary", [&]() -> std::pair<bool, std::string> {
    bool ok = check_isotropic_boundary(q1, k) && check_isotropic_boundary(q2, k);
    return {ok, "isotropic directions of Q1 and Q2 lie on bd K"};
  }));
  return rep;
}

Report e_report(const std::vector<Rational>& eps) {
  Report rep;
  rep.push_back(run_item("e/evidence", [&]() -> std::pair<bool, std::string> {
    auto items = e_cone_ir_evidence(Rational(-1), Rational(0), eps);
    std::ostringstream os;
    bool ok = items.size() == eps.size();
    for (std::size_t i = 0; i < items.size(); ++i) {
      ok = ok && items[i].upper <= items[i].target && (i == 0 || items[i].upper < items[i - 1].upper);
      os << (i ? "; " : "") << "eps " << to_string(items[i].eps) << ": q has " << to_string(items[i].q).size()
         << " digits, Q <= " << items[i].upper.get_d();
    }
    return {ok, os.str()};
  }));
  return rep;
}

}  // namespace perfekt
