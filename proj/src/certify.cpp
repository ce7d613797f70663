#include "perfekt/certify.hpp"

#include <algorithm>

#include "perfekt/error.hpp"
#include "perfekt/lp.hpp"

namespace perfekt {

std::string kind_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::Factorization:
      return "factorization";
    case CertificateKind::Separation:
      return "separation";
    case CertificateKind::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

Membership voronoi_membership(const SymMatrix& a, const std::vector<IntVec>& min_vectors,
                              const std::vector<Vec>& extra_isotropic) {
  int n = a.dim();
  Membership res;
  for (const auto& w : extra_isotropic) res.generators.push_back(w);
  for (const auto& v : min_vectors) res.generators.push_back(to_vec(v));
  if (res.generators.empty()) throw InputError("voronoi_membership needs at least one generator");
  for (const auto& g : res.generators) {
    if (static_cast<int>(g.size()) != n) throw DimensionMismatch("generator dimension differs from matrix");
  }
  // One equality per upper-triangle entry: sum_k alpha_k g_k,i g_k,j = A_ij.
  LPProblem p;
  int m = static_cast<int>(res.generators.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Vec row(m);
      for (int c = 0; c < m; ++c) row[c] = res.generators[c][i] * res.generators[c][j];
      p.a.push_back(row);
      p.sense.push_back(Sense::Equal);
      p.b.push_back(a(i, j));
    }
  }
  p.c.assign(m, Scalar(0));
  LPResult r = lp_solve(p);
  if (r.status == LPStatus::Optimal) {
    res.inside = true;
    res.coefficients = r.x;
    SymMatrix sum(n);
    for (int c = 0; c < m; ++c) {
      if (!r.x[c].is_zero()) sum += SymMatrix::outer(res.generators[c]) * r.x[c];
    }
    if (sum != a) throw Error("internal: Voronoi coefficients do not re-sum to A");
    return res;
  }
  // Farkas y over the entry rows gives H with H_ii = -y_ii, H_ij = -y_ij / 2.
  SymMatrix h(n);
  int row = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j, ++row) {
      h.set(i, j, i == j ? -r.farkas[row] : -r.farkas[row] * Scalar::fraction(1, 2));
    }
  }
  for (const auto& g : res.generators) {
    if (quad_eval(h, g).sign() < 0) throw Error("internal: separator is negative on a generator");
  }
  if (frobenius(h, a).sign() >= 0) throw Error("internal: separator does not cut off A");
  res.separator = h;
  return res;
}

RyshkovVertex start_vertex(const Cone& k, const CopminOptions& opts) {
  SymMatrix q0 = embed_perfect(q_an(k.dim()), k, opts) * Scalar::fraction(1, 2);
  return make_vertex(q0, generic_oracle(k, opts));
}

bool verify_factorization(const SymMatrix& a, const Cone& k, const Certificate& c) {
  if (c.kind != CertificateKind::Factorization || c.alphas.size() != c.vectors.size()) return false;
  SymMatrix sum(a.dim());
  for (std::size_t i = 0; i < c.alphas.size(); ++i) {
    if (!c.alphas[i].is_rational() || c.alphas[i].sign() <= 0) return false;
    if (!cone_contains(k, c.vectors[i]) || is_zero_vec(to_vec(c.vectors[i]))) return false;
    sum += SymMatrix::outer(c.vectors[i]) * c.alphas[i];
  }
  return sum == a;
}

bool verify_separation(const SymMatrix& a, const Cone& k, const Certificate& c, const CopminOptions& opts) {
  if (c.kind != CertificateKind::Separation || !c.q) return false;
  if (frobenius(a, *c.q).sign() >= 0 || frobenius(a, *c.q) != c.inner_product) return false;
  if (c.evidence == "ray") return is_K_copositive(*c.q, k).kind != Copositivity::NotCopositive;
  MinResult r = copositive_minimum(*c.q, k, opts);
  return r.status == MinStatus::Attained && *r.value >= Scalar(1);
}

namespace {

bool is_orthant(const Cone& k) {
  if (k.is_whole_space() || static_cast<int>(k.generators().size()) != k.dim()) return false;
  for (const auto& g : k.generators()) {
    int ones = 0;
    for (const auto& x : g) {
      if (x == Scalar(1)) {
        ++ones;
      } else if (!x.is_zero()) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  return true;
}

Certificate separation(const SymMatrix& a, const SymMatrix& q, std::string evidence, int visited) {
  Certificate c;
  c.kind = CertificateKind::Separation;
  c.q = q;
  c.inner_product = frobenius(a, q);
  c.evidence = std::move(evidence);
  c.visited = visited;
  return c;
}

enum class Goal { Factor, Separate };

// Walks R_K along edges that strictly decrease <A, Q>, as in a simplex method
// on {Q in R_K : <A, Q> <= lambda}.
Certificate descend(const SymMatrix& a, const Cone& k, const CertifyOptions& opts, Goal goal) {
  RyshkovVertex cur = start_vertex(k, opts.copmin);
  for (int visited = 1; visited <= opts.budget; ++visited) {
    if (goal == Goal::Separate && frobenius(a, cur.q).sign() < 0) {
      return separation(a, cur.q, "vertex", visited);
    }
    Membership m = voronoi_membership(a, cur.min_vectors);
    if (m.inside) {
      Certificate c;
      c.visited = visited;
      if (goal == Goal::Separate) {
        c.report = "A lies in the Voronoi cone of a vertex; no separation exists";
        return c;
      }
      c.kind = CertificateKind::Factorization;
      for (std::size_t i = 0; i < m.generators.size(); ++i) {
        if (m.coefficients[i].is_zero()) continue;
        c.alphas.push_back(m.coefficients[i]);
        c.vectors.push_back(to_intvec(m.generators[i]));
      }
      return c;
    }
    if (!cur.perfect) {
      Certificate c;
      c.visited = visited;
      c.report = "reached a non-perfect vertex " + cur.q.str();
      return c;
    }
    std::optional<SymMatrix> step;
    for (const auto& d : vertex_edges(cur)) {
      if (frobenius(a, d).sign() < 0) {
        step = d;
        break;
      }
    }
    if (!step) {
      Certificate c;
      c.visited = visited;
      c.report = "no improving edge at " + cur.q.str();
      return c;
    }
    NeighborResult nb = neighbor(cur, *step, k, opts.copmin);
    if (auto* ray = std::get_if<ExtremeRayDirection>(&nb.result)) {
      // <A, Q + tD> < 0 once t exceeds <A,Q> / -<A,D>.
      Scalar t(Integer((frobenius(a, cur.q) / -frobenius(a, ray->direction)).floor() + 1));
      return separation(a, cur.q + ray->direction * t, "vertex", visited);
    }
    cur = std::get<RyshkovVertex>(std::move(nb.result));
  }
  Certificate c;
  c.visited = opts.budget;
  c.report = "budget of " + std::to_string(opts.budget) + " vertices exhausted";
  return c;
}

}  // namespace

Certificate factorize(const SymMatrix& a, const Cone& k, const CertifyOptions& opts) {
  if (a.dim() != k.dim()) throw DimensionMismatch("matrix and cone dimensions differ");
  if (!a.is_rational()) throw InputError("factorize requires a rational matrix");
  if (positivity_margin(a, Cone::classical(a.dim())).c.sign() < 0) {
    throw PreconditionViolated("A is not positive semidefinite (negative margin); use the nonmembership path");
  }
  Certificate c = descend(a, k, opts, Goal::Factor);
  if (c.kind == CertificateKind::Factorization && !verify_factorization(a, k, c)) {
    throw Error("internal: factorization failed verification");
  }
  if (c.kind == CertificateKind::Separation && !verify_separation(a, k, c, opts.copmin)) {
    throw Error("internal: separation failed verification");
  }
  return c;
}

Certificate nonmembership_certificate(const SymMatrix& a, const Cone& k, const CertifyOptions& opts) {
  if (a.dim() != k.dim()) throw DimensionMismatch("matrix and cone dimensions differ");
  int n = a.dim();
  Certificate c;
  SymMatrix q0 = start_vertex(k, opts.copmin).q;
  if (frobenius(a, q0).sign() < 0) c = separation(a, q0, "vertex", 1);
  if (c.kind != CertificateKind::Separation && is_orthant(k)) {
    // Extreme rays of the nonnegative matrices: E_ii and E_ij + E_ji.
    for (int i = 0; i < n && c.kind != CertificateKind::Separation; ++i) {
      for (int j = i; j < n; ++j) {
        SymMatrix e(n);
        e.set(i, j, Scalar(1));
        if (frobenius(a, e).sign() < 0) {
          c = separation(a, e, "ray", 0);
          break;
        }
      }
    }
  }
  if (c.kind != CertificateKind::Separation) c = descend(a, k, opts, Goal::Separate);
  if (c.kind == CertificateKind::Separation && !verify_separation(a, k, c, opts.copmin)) {
    throw Error("internal: separation failed verification");
  }
  return c;
}

}  // namespace perfekt
