#include "perfekt/reproduce.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "perfekt/casestudy.hpp"
#include "perfekt/certify.hpp"
#include "perfekt/error.hpp"
#include "perfekt/numtheory.hpp"

namespace perfekt {

namespace {

using Outcome = std::pair<bool, std::string>;

struct Criterion {
  std::string key, title;
  double limit;
  std::function<Outcome(const ReproOptions&)> run;
};

IntVec iv(long p, long q) { return {Integer(p), Integer(q)}; }

// Exact inverse of an integer matrix, by columns.
Matrix inverse(const IntMatrix& g) {
  int n = static_cast<int>(g.size());
  Matrix a(n, Vec(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Scalar(g[i][j]);
  }
  Matrix inv(n, Vec(n));
  for (int j = 0; j < n; ++j) {
    Vec e(n, Scalar(0));
    e[j] = Scalar(1);
    auto x = solve(a, e);
    if (!x) throw Error("singular generator matrix");
    for (int i = 0; i < n; ++i) inv[i][j] = (*x)[i];
  }
  return inv;
}

// G^{-T} S G^{-1}: S[y] = Q[G y].
SymMatrix pull_back(const SymMatrix& s, const Matrix& ginv) {
  int n = s.dim();
  SymMatrix q(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Scalar v(0);
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) v += ginv[k][i] * s(k, l) * ginv[l][j];
      }
      q.set(i, j, v);
    }
  }
  return q;
}

// Random simplicial cone with primitive integer generators (columns of G).
IntMatrix random_generators(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> e(-1, 2);
  for (;;) {
    IntMatrix g(n, IntVec(n));
    for (auto& row : g) {
      for (auto& x : row) x = e(rng);
    }
    if (determinant(g) == 0) continue;
    bool primitive_cols = true;
    for (int j = 0; j < n; ++j) {
      IntVec c(n);
      for (int i = 0; i < n; ++i) c[i] = g[i][j];
      primitive_cols = primitive_cols && primitive(c) == c;
    }
    if (primitive_cols) return g;
  }
}

Cone cone_of(const IntMatrix& g) {
  int n = static_cast<int>(g.size());
  std::vector<Vec> gens;
  for (int j = 0; j < n; ++j) {
    Vec c(n);
    for (int i = 0; i < n; ++i) c[i] = Scalar(g[i][j]);
    gens.push_back(c);
  }
  return Cone::from_generators(gens);
}

// Calls f on every nonzero integer vector with |z|_inf <= b.
void for_each_box_point(int n, long b, const std::function<void(const IntVec&)>& f) {
  IntVec z(n, Integer(-b));
  for (;;) {
    if (!std::all_of(z.begin(), z.end(), [](const Integer& x) { return x == 0; })) f(z);
    int i = 0;
    while (i < n && z[i] == b) z[i++] = -b;
    if (i == n) return;
    z[i] += 1;
  }
}

SymMatrix resum(const std::vector<Scalar>& alphas, const std::vector<IntVec>& vs, int n) {
  SymMatrix s(n);
  for (std::size_t i = 0; i < alphas.size(); ++i) s += SymMatrix::outer(vs[i]) * alphas[i];
  return s;
}

Outcome pell_row(const ReproOptions&) {
  MinResult m = q1_minimum(30);
  bool ok = m.status == MinStatus::Attained && *m.value == Scalar(1) &&
            m.min_vectors == std::vector<IntVec>{iv(1, 1), iv(7, 5), iv(41, 29)};
  for (const auto& v : m.min_vectors) ok = ok && v[0] * v[0] - 2 * v[1] * v[1] == -1;
  // Exhaustive over K cap Z^2, q <= 30: Q1 >= 1 with equality exactly at these.
  SymMatrix q1 = q1_matrix();
  std::vector<IntVec> ones;
  for (long q = 1; q <= 30; ++q) {
    for (long p = 0; p * p <= 2 * q * q; ++p) {
      Scalar v = quad_eval(q1, iv(p, q));
      ok = ok && v >= Scalar(1);
      if (v == Scalar(1)) ones.push_back(iv(p, q));
    }
  }
  ok = ok && ones == m.min_vectors;
  return {ok, "min 1 at (1,1) (7,5) (41,29)"};
}

Outcome q2_row(const ReproOptions& o) {
  SymMatrix q2 = o.q2_override.value_or(q2_matrix());
  bool ok = quad_eval(q2, iv(1, 1)) == Scalar(1) && quad_eval(q2, iv(0, 1)) == Scalar(1);
  MinResult m = face_minimum(q2);
  ok = ok && m.status == MinStatus::Attained && *m.value == Scalar(1) &&
       m.min_vectors == std::vector<IntVec>{iv(0, 1), iv(1, 1)};
  int r = voronoi_cone_rank(m.min_vectors);
  ok = ok && r == 2;
  return {ok, "Q2[(1,1)] = Q2[(0,1)] = 1, Voronoi rank " + std::to_string(r) + " < 3"};
}

Outcome report_row(const Report& rep) {
  std::string failed;
  for (const auto& i : rep) {
    if (!i.pass) failed += (failed.empty() ? "" : "; ") + i.key + ": " + i.detail;
  }
  return {all_pass(rep), failed.empty() ? std::to_string(rep.size()) + " checks" : failed};
}

Outcome edge_row(const ReproOptions&) {
  bool ok = q1_q2_edge_length() == Scalar(Rational(1, 2), Rational(1, 4), 2) &&
            q1_matrix() + q1_q2_edge_direction() * q1_q2_edge_length() == q2_matrix();
  auto [pass, detail] = report_row(ryshkov_edge_and_rays_check(40));
  return {ok && pass, "endpoint " + q1_q2_edge_length().str() + ", " + detail};
}

Outcome voronoi_row(const ReproOptions&) { return report_row(voronoi_insufficiency_check()); }

Outcome boundary_row(const ReproOptions&) {
  IntVec z = boundary_ray_min_zero(BoundaryRay::Ray2, Rational(1, 500));
  Scalar v = quad_eval(boundary_ray_generator(BoundaryRay::Ray2), z);
  bool ok = z == iv(41, 29) && v == Scalar(Rational(3363), Rational(-2378), 2) && v <= Scalar(Rational(1, 841));
  return {ok, "(" + to_string(z[0]) + "," + to_string(z[1]) + ") value " + v.str()};
}

Outcome an_row(const ReproOptions& o) {
  CopminOptions co;
  co.workers = o.workers;
  std::ostringstream os;
  bool ok = true;
  for (int n = 2; n <= 4; ++n) {
    SymMatrix q = q_an(n);
    Cone k = Cone::orthant(n);
    MinResult m = copositive_minimum(q, k, co);
    PerfectResult p = is_perfect(q, k, co);
    // Brute force over the box |z|_inf <= 4 in the orthant.
    std::optional<Scalar> best;
    std::vector<IntVec> at;
    for_each_box_point(n, 4, [&](const IntVec& z) {
      if (std::any_of(z.begin(), z.end(), [](const Integer& x) { return x < 0; })) return;
      Scalar v = quad_eval(q, z);
      if (!best || v < *best) {
        best = v;
        at.clear();
      }
      if (v == *best) at.push_back(z);
    });
    std::sort(at.begin(), at.end());
    ok = ok && m.status == MinStatus::Attained && *m.value == Scalar(2) && *best == Scalar(2) &&
         at == m.min_vectors && p.perfect;
    os << "n=" << n << ": " << m.min_vectors.size() << " minimal vectors" << (n < 4 ? "; " : "");
  }
  return {ok, os.str()};
}

Outcome factorization_row(const ReproOptions& o) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> e(1, 4), al(1, 6);
  CertifyOptions co;
  co.copmin.workers = o.workers;
  int good = 0;
  for (int t = 0; t < 100; ++t) {
    int n = t < 50 ? 2 : 3;
    Cone k = Cone::orthant(n);
    SymMatrix a(n);
    for (int s = 0; s <= sym_dim(n); ++s) {
      IntVec x(n);
      for (auto& c : x) c = e(rng);
      a += SymMatrix::outer(x) * Scalar::fraction(al(rng), al(rng));
    }
    Certificate c = factorize(a, k, co);
    if (c.kind != CertificateKind::Factorization) return {false, "no factorization for " + a.str()};
    bool inside = std::all_of(c.vectors.begin(), c.vectors.end(), [&](const IntVec& v) { return cone_contains(k, v); });
    bool nonneg = std::all_of(c.alphas.begin(), c.alphas.end(), [](const Scalar& x) { return x.sign() >= 0; });
    if (resum(c.alphas, c.vectors, n) != a || !inside || !nonneg || !verify_factorization(a, k, c)) {
      return {false, "factorization does not re-sum for " + a.str()};
    }
    if (n == 2 && nonmembership_certificate(a, k, co).kind == CertificateKind::Separation) {
      return {false, "member also separated: " + a.str()};
    }
    ++good;
  }
  return {good == 100, std::to_string(good) + "/100 exact factorizations"};
}

Outcome separation_row(const ReproOptions& o) {
  std::mt19937_64 rng(99173);
  std::uniform_int_distribution<int> e(-6, 6);
  CertifyOptions co;
  co.copmin.workers = o.workers;
  Cone k = Cone::orthant(2);
  int good = 0;
  while (good < 100) {
    SymMatrix a(2);
    a.set(0, 0, Scalar(e(rng)));
    a.set(0, 1, Scalar(e(rng)));
    a.set(1, 1, Scalar(e(rng)));
    // Over the 2d orthant CP = PSD cap entrywise nonnegative; skip members.
    bool nonneg = a(0, 0).sign() >= 0 && a(0, 1).sign() >= 0 && a(1, 1).sign() >= 0;
    bool psd = nonneg && (a(0, 0) * a(1, 1) - a(0, 1) * a(0, 1)).sign() >= 0;
    if (psd) continue;
    Certificate c = nonmembership_certificate(a, k, co);
    if (c.kind != CertificateKind::Separation || !c.q || frobenius(a, *c.q).sign() >= 0 ||
        c.inner_product != frobenius(a, *c.q) || !verify_separation(a, k, c, co.copmin)) {
      return {false, "no valid separation for " + a.str()};
    }
    try {
      if (factorize(a, k, co).kind == CertificateKind::Factorization) return {false, "both kinds for " + a.str()};
    } catch (const PreconditionViolated&) {
    }
    ++good;
  }
  return {true, "100/100 separations with <A,Q> < 0"};
}

Outcome copmin_row(const ReproOptions& o) {
  std::mt19937_64 rng(4471);
  std::uniform_int_distribution<int> nn(0, 3);
  CopminOptions co;
  co.workers = o.workers;
  for (int t = 0; t < 50; ++t) {
    int n = t < 25 ? 2 : 3;
    IntMatrix g = random_generators(rng, n);
    Cone k = cone_of(g);
    // S = I + N with N >= 0 is strictly copositive on the orthant, so
    // Q = G^{-T} S G^{-1} is strictly K-copositive with Q[G y] = S[y] >= |y|^2.
    SymMatrix s = SymMatrix::identity(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) s.set(i, j, s(i, j) + Scalar(nn(rng)));
    }
    SymMatrix q = pull_back(s, inverse(g));
    MinResult m = copositive_minimum(q, k, co);
    // |z|_inf <= |G|_inf |y|_2 and Q[z] >= |y|^2, so minimizers satisfy
    // |z|_inf^2 <= seed |G|_inf^2 with seed = min S_jj (the generators).
    Integer rowmax = 0;
    for (const auto& row : g) {
      Integer r = 0;
      for (const auto& x : row) r += abs(x);
      rowmax = std::max(rowmax, r);
    }
    Scalar seed = s(0, 0);
    for (int j = 1; j < n; ++j) seed = std::min(seed, s(j, j));
    long b = ceil_sqrt(seed * Scalar(Integer(rowmax * rowmax))).get_si();
    std::optional<Scalar> best;
    std::vector<IntVec> at;
    for_each_box_point(n, b, [&](const IntVec& z) {
      if (!cone_contains(k, z)) return;
      Scalar v = quad_eval(q, z);
      if (!best || v < *best) {
        best = v;
        at.clear();
      }
      if (v == *best) at.push_back(z);
    });
    std::sort(at.begin(), at.end());
    if (m.status != MinStatus::Attained || *m.value != *best || m.min_vectors != at) {
      return {false, "mismatch on " + q.str()};
    }
  }
  return {true, "50/50 match exhaustive enumeration"};
}

Outcome cf_row(const ReproOptions&) {
  const Scalar r2 = Scalar::sqrt(2);
  ContinuedFraction s = cf_expand(r2, 12);
  std::vector<Integer> want(12, Integer(2));
  want[0] = 1;
  bool ok = s.quotients == want;
  // Euler: e = [2; 1, 2, 1, 1, 4, 1, 1, 6, ...].
  ContinuedFraction e = cf_of_e(11);
  ok = ok && e.quotients.size() == 12 && e.quotients[0] == 2;
  for (int i = 1; i < 12 && ok; ++i) ok = e.quotients[i] == (i % 3 == 2 ? Integer(2 * (i + 1) / 3) : Integer(1));
  for (const auto* cf : {&s, &e}) {
    auto cs = convergents(*cf, static_cast<int>(cf->quotients.size()));
    for (std::size_t i = 1; i < cs.size(); ++i) {
      Integer det = cs[i].p * cs[i - 1].q - cs[i - 1].p * cs[i].q;
      ok = ok && det == (i % 2 == 1 ? 1 : -1);
    }
  }
  auto cs = convergents(cf_expand(r2, 13), 13);
  for (const auto& c : cs) {
    Scalar gap = (r2 - Scalar(Rational(c.p, c.q))).abs();
    ok = ok && gap < Scalar(Rational(1, c.q * c.q));
  }
  return {ok, "sqrt2 = [1; 2 x 11], e pattern to a_11, determinant identity, |sqrt2 - p/q| < 1/q^2 for i <= 12"};
}

Outcome ir_row(const ReproOptions& o) {
  std::mt19937_64 rng(3301);
  std::uniform_int_distribution<int> small(-2, 2), nn(0, 2), pos(1, 3);
  CopminOptions co;
  co.workers = o.workers;
  for (int t = 0; t < 20; ++t) {
    int n = t < 10 ? 2 : 3;
    IntMatrix g = random_generators(rng, n);
    Cone k = cone_of(g);
    if (!std::holds_alternative<GuaranteedIR>(ir_status(k))) return {false, "cone not reported IR"};
    // y0 >= 0 with a zero coordinate, so w = G y0 lies on bd K.
    IntVec y0(n);
    for (auto& x : y0) x = pos(rng);
    y0[rng() % n] = 0;
    // S = sum l l^T (l orthogonal to y0) + N, N >= 0 vanishing on supp(y0):
    // copositive on the orthant with S[y0] = 0.
    SymMatrix s(n);
    for (int r = 0; r < 2; ++r) {
      IntVec l(n);
      for (auto& x : l) x = small(rng);
      int piv = 0;
      while (y0[piv] == 0) ++piv;
      // Fix one coordinate in the support so that l . y0 = 0.
      l[piv] = 0;
      Integer d = 0;
      for (int i = 0; i < n; ++i) d += l[i] * y0[i];
      for (auto& x : l) x *= y0[piv];
      l[piv] = -d;
      s += SymMatrix::outer(l);
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        if (y0[i] == 0 || y0[j] == 0) s.set(i, j, s(i, j) + Scalar(nn(rng)));
      }
    }
    SymMatrix q = pull_back(s, inverse(g));
    IntVec w(n, Integer(0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) w[i] += g[i][j] * y0[j];
    }
    if (!quad_eval(q, w).is_zero()) return {false, "construction is not isotropic"};
    MinResult m = copositive_minimum(q, k, co);
    if (m.status != MinStatus::Attained || !m.value->is_zero() || m.min_vectors.empty()) {
      return {false, "minimum is not 0 on " + q.str()};
    }
    for (int e = 1; e <= 10; ++e) {
      const IntVec& z = m.min_vectors.front();
      if (!cone_contains(k, z) || quad_eval(q, z) >= Scalar(Rational(1, Integer(1) << e))) {
        return {false, "no point below 2^-" + std::to_string(e)};
      }
    }
  }
  return {true, "20/20 cones: integer points with Q[z] < 2^-k, k <= 10"};
}

Outcome e_row(const ReproOptions&) {
  std::vector<Rational> eps = {Rational(1, 10), Rational(1, 20), Rational(1, 40), Rational(1, 80), Rational(1, 160)};
  auto items = e_cone_ir_evidence(Rational(-1), Rational(0), eps);
  bool ok = items.size() == 5 && items[0].upper <= Rational(3, 5);
  for (std::size_t i = 0; i < items.size(); ++i) {
    ok = ok && items[i].upper <= items[i].target && items[i].upper <= Rational(3, 5);
    if (i) ok = ok && items[i].upper < items[i - 1].upper;
  }
  std::ostringstream os;
  os << "certified values";
  for (const auto& i : items) os << " " << i.upper.get_d();
  return {ok, os.str()};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> c = {
      {"sqrt2/q1-pell", "Q1 minimum 1 at negative Pell vectors", 1.0, pell_row},
      {"sqrt2/q2-vertex", "Q2 vertex is not perfect", 1.0, q2_row},
      {"sqrt2/edge-rays", "Q1-Q2 edge and rays", 1.0, edge_row},
      {"sqrt2/voronoi", "Voronoi cone insufficiency", 1.0, voronoi_row},
      {"sqrt2/boundary-infimum", "boundary ray infimum 0", 1.0, boundary_row},
      {"orthant/an-perfect", "Q_An perfect copositive, n = 2, 3, 4", 10.0, an_row},
      {"orthant/factorization", "random CP members factorize exactly", 60.0, factorization_row},
      {"orthant/separation", "random non-members are separated", 30.0, separation_row},
      {"copmin/oracle", "copositive minimum equals enumeration", 60.0, copmin_row},
      {"numtheory/continued-fractions", "continued fractions of sqrt2 and e", 1.0, cf_row},
      {"ir/rational-cones", "rationally generated cones are IR", 30.0, ir_row},
      {"e/evidence", "e cone minimum tends to 0", 5.0, e_row},
  };
  return c;
}

}  // namespace

std::vector<std::string> reproduce_keys() {
  std::vector<std::string> keys;
  for (const auto& c : criteria()) keys.push_back(c.key);
  return keys;
}

std::vector<ReproRow> reproduce(const ReproOptions& opts) {
  std::vector<ReproRow> rows;
  for (const auto& c : criteria()) {
    if (!opts.only.empty() && c.key.rfind(opts.only, 0) != 0) continue;
    ReproRow row{c.key, c.title, false, 0, c.limit, ""};
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto [ok, detail] = c.run(opts);
      row.pass = ok;
      row.detail = detail;
    } catch (const std::exception& e) {
      row.detail = std::string("error: ") + e.what();
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (row.seconds > row.limit_seconds) {
      row.pass = false;
      row.detail += " (time limit exceeded)";
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace perfekt
