#include "perfekt/ryshkov.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "perfekt/error.hpp"

namespace perfekt {

namespace {

void for_each_subset(int m, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      f(idx);
      return;
    }
    for (int i = start; i <= m - (k - depth); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

// Scales a direction to a canonical representative of its ray.
Vec normalize_ray(Vec d) {
  bool rational = std::all_of(d.begin(), d.end(), [](const Scalar& x) { return x.is_rational(); });
  if (rational) {
    IntVec p = primitive(d);
    return to_vec(p);
  }
  for (const auto& x : d) {
    if (!x.is_zero()) {
      Scalar s = x.abs();
      for (auto& y : d) y = y / s;
      break;
    }
  }
  return d;
}

std::optional<IntVec> point_below(const MinResult& r, const SymMatrix& q, const Scalar& level) {
  if (r.status == MinStatus::NegativeUnbounded) return r.witness;
  if (!r.value || *r.value >= level) return std::nullopt;
  for (const auto& v : r.min_vectors) {
    if (quad_eval(q, v) < level) return v;
  }
  if (r.witness && quad_eval(q, *r.witness) < level) return r.witness;
  throw Error("minimum oracle reported a value below " + level.str() + " without a witness");
}

}  // namespace

int voronoi_cone_rank(const std::vector<IntVec>& vectors) {
  Matrix rows;
  for (const auto& v : vectors) rows.push_back(outer_functional(v));
  return rank(rows);
}

PerfectResult is_perfect(const SymMatrix& q, const Scalar& minimum, const std::vector<IntVec>& min_vectors) {
  if (minimum.sign() <= 0) throw PreconditionViolated("perfectness needs a positive minimum, got " + minimum.str());
  PerfectResult res;
  res.q = q * (Scalar(1) / minimum);
  res.min_vectors = min_vectors;
  res.rank = voronoi_cone_rank(min_vectors);
  int n = q.dim();
  res.perfect = res.rank == sym_dim(n);
  if (res.perfect) {
    Matrix rows;
    for (const auto& v : min_vectors) {
      rows.push_back(outer_functional(v));
      if (rank(rows) == static_cast<int>(rows.size())) {
        res.rank_witness.push_back(v);
      } else {
        rows.pop_back();
      }
    }
  }
  return res;
}

PerfectResult is_perfect(const SymMatrix& q, const Cone& k, const CopminOptions& opts) {
  MinResult r = copositive_minimum(q, k, opts);
  if (r.status == MinStatus::BoundaryUnsupported) {
    throw BoundaryUnsupported("minimum of " + q.str() + " sits on an irrational isotropic ray");
  }
  if (r.status != MinStatus::Attained) throw PreconditionViolated("matrix is not K-copositive");
  return is_perfect(q, *r.value, r.min_vectors);
}

MinOracle generic_oracle(const Cone& k, const CopminOptions& opts) {
  return [k, opts](const SymMatrix& q, const Scalar&) {
    MinResult r = copositive_minimum(q, k, opts);
    if (r.status == MinStatus::BoundaryUnsupported) {
      throw BoundaryUnsupported("minimum of " + q.str() + " sits on an irrational isotropic ray");
    }
    return r;
  };
}

RyshkovVertex make_vertex(const SymMatrix& q, const MinOracle& oracle) {
  MinResult r = oracle(q, Scalar(1));
  if (r.status != MinStatus::Attained || *r.value != Scalar(1)) {
    throw PreconditionViolated("matrix does not have K-copositive minimum 1: " + q.str());
  }
  RyshkovVertex v;
  v.q = q;
  v.min_vectors = r.min_vectors;
  v.infinite = r.infinite;
  v.perfect = voronoi_cone_rank(r.min_vectors) == sym_dim(q.dim());
  return v;
}

std::vector<SymMatrix> vertex_edges(const RyshkovVertex& v) {
  if (!v.perfect) throw PreconditionViolated("edges are only enumerated at perfect vertices");
  int n = v.q.dim();
  int big_n = sym_dim(n);
  Matrix rows;
  for (const auto& z : v.min_vectors) {
    Vec f = outer_functional(z);
    if (std::find(rows.begin(), rows.end(), f) == rows.end()) rows.push_back(f);
  }
  std::vector<Vec> rays;
  for_each_subset(static_cast<int>(rows.size()), big_n - 1, [&](const std::vector<int>& idx) {
    Matrix sub;
    for (int i : idx) sub.push_back(rows[i]);
    auto ns = nullspace(sub, big_n);
    if (ns.size() != 1) return;
    bool pos = true, neg = true;
    for (const auto& r : rows) {
      int s = dot(r, ns[0]).sign();
      pos = pos && s >= 0;
      neg = neg && s <= 0;
    }
    if (!pos && !neg) return;
    Vec d = ns[0];
    if (!pos) {
      for (auto& x : d) x = -x;
    }
    d = normalize_ray(d);
    if (std::find(rays.begin(), rays.end(), d) == rays.end()) rays.push_back(d);
  });
  std::vector<SymMatrix> out;
  for (const auto& r : rays) out.push_back(SymMatrix::from_coords(n, r));
  std::sort(out.begin(), out.end(), [](const SymMatrix& a, const SymMatrix& b) { return lex_less(a, b); });
  return out;
}

namespace {

RyshkovVertex vertex_from(const SymMatrix& q, const MinResult& r) {
  RyshkovVertex w;
  w.q = q;
  w.min_vectors = r.min_vectors;
  w.infinite = r.infinite;
  w.perfect = voronoi_cone_rank(r.min_vectors) == sym_dim(q.dim());
  return w;
}

// Finds a step u > 0 and an integer z with (Q + uD)[z] < 1. With a probe
// oracle (generic case) steps are only accepted where Q + uD is strictly
// K-copositive and the probe stays under its cap; rejected steps are bisected
// towards the last step known to keep the minimum >= 1.
std::pair<Scalar, IntVec> first_crossing(const RyshkovVertex& v, const SymMatrix& d, const Cone& k,
                                         const MinOracle& oracle, bool guard) {
  const Scalar one(1), half = Scalar::fraction(1, 2);
  Scalar lo(0), u(1);
  std::optional<Scalar> hi;
  for (int iter = 0; iter < 2000; ++iter) {
    SymMatrix qt = v.q + d * u;
    bool rejected = guard && positivity_margin(qt, k).c.sign() <= 0;
    std::optional<IntVec> z;
    if (!rejected) {
      try {
        z = point_below(oracle(qt, one), qt, one);
      } catch (const CapExceeded&) {
        rejected = true;
      }
    }
    if (z) return {u, *z};
    if (rejected) {
      hi = u;
      u = (lo + u) * half;
    } else {
      lo = u;
      u = hi ? (u + *hi) * half : u * Scalar(2);
    }
  }
  throw Error("no step length found along a non-copositive direction");
}

NeighborResult step_to_neighbor(const RyshkovVertex& v, const SymMatrix& d, const Cone& k, const MinOracle& oracle,
                                const MinOracle& probe, bool guard) {
  if (d.dim() != v.q.dim()) throw DimensionMismatch("edge direction dimension differs from vertex");
  for (const auto& z : v.min_vectors) {
    if (quad_eval(d, z).sign() < 0) throw PreconditionViolated("direction leaves R_K at minimal vector " + str(z));
  }
  NeighborResult res;
  // Q + tD stays in R_K for all t >= 0 exactly when D is K-copositive.
  if (is_K_copositive(d, k).kind != Copositivity::NotCopositive) {
    res.result = ExtremeRayDirection{d};
    return res;
  }
  const Scalar one(1);
  auto [u, z0] = first_crossing(v, d, k, probe, guard);
  std::optional<IntVec> z = z0;
  // Shrink t to the exact crossing of the offending vector until the minimum
  // is 1. Each crossing lies in [lo, u], where the margin stays positive.
  for (int iter = 0; iter < 10000; ++iter) {
    Scalar t = (quad_eval(v.q, *z) - one) / -quad_eval(d, *z);
    SymMatrix qt = v.q + d * t;
    MinResult r = oracle(qt, one);
    if (r.status == MinStatus::Attained && *r.value == one) {
      res.result = vertex_from(qt, r);
      res.step = t;
      return res;
    }
    z = point_below(r, qt, one);
    if (!z) throw Error("minimum along the edge is not attained at the crossing point");
  }
  throw Error("step search did not converge");
}

}  // namespace

NeighborResult neighbor(const RyshkovVertex& v, const SymMatrix& d, const Cone& k, const MinOracle& oracle) {
  return step_to_neighbor(v, d, k, oracle, oracle, false);
}

NeighborResult neighbor(const RyshkovVertex& v, const SymMatrix& d, const Cone& k, const CopminOptions& opts) {
  CopminOptions probe_opts = opts;
  probe_opts.cap = std::min<long>(opts.cap, k.dim() == 2 ? 4096 : 128);
  return step_to_neighbor(v, d, k, generic_oracle(k, opts), generic_oracle(k, probe_opts), true);
}

TraversalResult traverse(const RyshkovVertex& start, const Cone& k, int budget, const std::vector<IntMatrix>& symmetry,
                         const CopminOptions& opts) {
  if (budget < 0) throw InputError("budget must be nonnegative");
  int n = start.q.dim();
  // Enumerate (part of) the group generated by the symmetries.
  std::vector<IntMatrix> gens;
  for (const auto& g : symmetry) {
    if (static_cast<int>(g.size()) != n) throw DimensionMismatch("symmetry matrix has wrong size");
    gens.push_back(g);
    gens.push_back(unimodular_inverse(g));
  }
  IntMatrix id(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  std::vector<IntMatrix> group = {id};
  constexpr std::size_t group_cap = 1000;
  for (std::size_t i = 0; i < group.size() && group.size() < group_cap; ++i) {
    for (const auto& g : gens) {
      IntMatrix h = multiply(group[i], g);
      if (std::find(group.begin(), group.end(), h) == group.end()) group.push_back(h);
      if (group.size() >= group_cap) break;
    }
  }

  TraversalResult res;
  res.vertices.push_back(start);
  auto known = [&](const SymMatrix& q) {
    for (const auto& g : group) {
      SymMatrix h = congruence(q, g);
      for (const auto& v : res.vertices) {
        if (v.q == h) return true;
      }
    }
    return false;
  };
  std::deque<int> queue = {0};
  int expanded = 0;
  while (!queue.empty() && expanded < budget) {
    int idx = queue.front();
    queue.pop_front();
    if (!res.vertices[idx].perfect) continue;
    ++expanded;
    RyshkovVertex cur = res.vertices[idx];
    for (const auto& d : vertex_edges(cur)) {
      auto nb = neighbor(cur, d, k, opts);
      if (auto* ray = std::get_if<ExtremeRayDirection>(&nb.result)) {
        res.rays.emplace_back(idx, ray->direction);
        continue;
      }
      auto& w = std::get<RyshkovVertex>(nb.result);
      if (known(w.q)) continue;
      res.vertices.push_back(std::move(w));
      queue.push_back(static_cast<int>(res.vertices.size()) - 1);
    }
  }
  res.budget_exhausted = std::any_of(queue.begin(), queue.end(), [&](int i) { return res.vertices[i].perfect; });

  // Canonical order, independent of discovery order.
  std::vector<int> order(res.vertices.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return lex_less(res.vertices[a].q, res.vertices[b].q); });
  std::vector<int> where(order.size());
  std::vector<RyshkovVertex> sorted;
  for (std::size_t i = 0; i < order.size(); ++i) {
    where[order[i]] = static_cast<int>(i);
    sorted.push_back(res.vertices[order[i]]);
  }
  res.vertices = std::move(sorted);
  for (auto& r : res.rays) r.first = where[r.first];
  std::sort(res.rays.begin(), res.rays.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return lex_less(a.second, b.second);
  });
  return res;
}

SymMatrix embed_perfect(const SymMatrix& q_classical, const Cone& k, const CopminOptions& opts) {
  int n = q_classical.dim();
  if (k.dim() != n) throw DimensionMismatch("matrix and cone dimensions differ");
  if (!is_perfect(q_classical, Cone::classical(n), opts).perfect) {
    throw PreconditionViolated("input is not classically perfect");
  }
  IntMatrix u = columns(lattice_basis_in_cone(k));
  SymMatrix out = congruence(q_classical, unimodular_inverse(u));
  if (!is_perfect(out, k, opts).perfect) {
    throw PreconditionViolated("embedded form is not perfect over the cone");
  }
  return out;
}

}  // namespace perfekt
