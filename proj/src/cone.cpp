#include "perfekt/cone.hpp"

#include <algorithm>
#include <functional>

#include "perfekt/error.hpp"

namespace perfekt {

namespace {

bool positively_proportional(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) return false;
  std::size_t i = 0;
  while (i < u.size() && u[i].is_zero() && v[i].is_zero()) ++i;
  if (i == u.size()) return true;
  if (u[i].is_zero() || v[i].is_zero()) return false;
  Scalar lambda = u[i] / v[i];
  if (lambda.sign() <= 0) return false;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] != lambda * v[k]) return false;
  }
  return true;
}

Vec scale_if_rational(const Vec& v) {
  for (const auto& x : v) {
    if (!x.is_rational()) return v;
  }
  return to_vec(primitive(v));
}

// Generalized cross product of n-1 vectors in R^n.
Vec normal_of(const std::vector<Vec>& rows, int n) {
  Vec normal(n);
  for (int k = 0; k < n; ++k) {
    Matrix minor;
    for (const auto& r : rows) {
      Vec row;
      for (int j = 0; j < n; ++j) {
        if (j != k) row.push_back(r[j]);
      }
      minor.push_back(std::move(row));
    }
    Scalar det = minor.empty() ? Scalar(1) : determinant(minor);
    normal[k] = (k % 2 == 0) ? det : -det;
  }
  return normal;
}

void for_each_combination(int m, int k, const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> idx(k);
  std::function<bool(int, int)> rec = [&](int start, int depth) -> bool {
    if (depth == k) return f(idx);
    for (int i = start; i <= m - (k - depth); ++i) {
      idx[depth] = i;
      if (!rec(i + 1, depth + 1)) return false;
    }
    return true;
  };
  rec(0, 0);
}

Integer gcd_of_minors(const std::vector<IntVec>& rows, int n) {
  int k = static_cast<int>(rows.size());
  Integer g = 0;
  for_each_combination(n, k, [&](const std::vector<int>& cols) {
    IntMatrix m(k, IntVec(k));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) m[i][j] = rows[i][cols[j]];
    }
    g = gcd(g, determinant(m));
    return g != 1;
  });
  return g;
}

}  // namespace

Cone Cone::from_generators(std::vector<Vec> generators, std::optional<bool> rationally_generated, std::string tag) {
  Cone k;
  if (generators.empty()) throw InputError("cone needs at least one generator");
  k.n_ = static_cast<int>(generators[0].size());
  for (auto& g : generators) g = scale_if_rational(g);
  bool all_rational = std::all_of(generators.begin(), generators.end(), is_integer_vec);
  k.rationally_generated_ = rationally_generated.value_or(all_rational);
  k.tag_ = std::move(tag);
  k.generators_ = std::move(generators);
  if (!k.is_whole_space()) k.facets_ = dual_facets_from_generators(k.generators_);
  k.validate();
  return k;
}

Cone Cone::from_representation(std::vector<Vec> generators, std::vector<Vec> facets, bool rationally_generated,
                               std::string tag) {
  Cone k;
  if (generators.empty()) throw InputError("cone needs at least one generator");
  k.n_ = static_cast<int>(generators[0].size());
  for (auto& g : generators) g = scale_if_rational(g);
  k.generators_ = std::move(generators);
  k.facets_ = std::move(facets);
  k.rationally_generated_ = rationally_generated;
  k.tag_ = std::move(tag);
  k.validate();
  if (!k.is_whole_space()) {
    auto computed = dual_facets_from_generators(k.generators_);
    bool same = computed.size() == k.facets_.size();
    for (const auto& f : computed) {
      bool found = std::any_of(k.facets_.begin(), k.facets_.end(),
                               [&](const Vec& g) { return positively_proportional(f, g); });
      same = same && found;
    }
    if (!same) throw InputError("facets do not match the cone generated by the generators");
  }
  return k;
}

Cone Cone::orthant(int n) {
  std::vector<Vec> gens;
  for (int i = 0; i < n; ++i) {
    Vec e(n);
    e[i] = 1;
    gens.push_back(e);
  }
  return from_representation(gens, gens, true, "orthant");
}

Cone Cone::classical(int n) {
  std::vector<Vec> gens;
  for (int i = 0; i < n; ++i) {
    Vec e(n);
    e[i] = 1;
    gens.push_back(e);
    e[i] = -1;
    gens.push_back(e);
  }
  return from_representation(gens, {}, true, "classical");
}

Cone Cone::sqrt2() {
  std::vector<Vec> gens = {{Scalar::sqrt(2), Scalar(1)}, {Scalar(0), Scalar(1)}};
  std::vector<Vec> facets = {{Scalar(1), Scalar(0)}, {Scalar(-1), Scalar::sqrt(2)}};
  return from_representation(gens, facets, false, "sqrt2");
}

int Cone::field() const {
  int d = 0;
  for (const auto& g : generators_) {
    for (const auto& x : g) d = common_field(d, x.radicand());
  }
  for (const auto& f : facets_) {
    for (const auto& x : f) d = common_field(d, x.radicand());
  }
  return d;
}

void Cone::validate() const {
  if (n_ < 1) throw InputError("cone dimension must be >= 1");
  for (const auto& g : generators_) {
    if (static_cast<int>(g.size()) != n_) throw DimensionMismatch("generator length differs from cone dimension");
    if (is_zero_vec(g)) throw InputError("zero generator");
  }
  for (const auto& f : facets_) {
    if (static_cast<int>(f.size()) != n_) throw DimensionMismatch("facet length differs from cone dimension");
  }
  field();
  if (rank(generators_) != n_) throw InputError("cone is not full-dimensional");
  if (rationally_generated_) {
    for (const auto& g : generators_) {
      if (!is_integer_vec(g)) throw InputError("rationally generated cone has an irrational generator");
    }
  }
  if (is_whole_space()) {
    if (!facets_.empty()) throw InputError("whole-space cone has no facets");
    return;
  }
  if (facets_.empty()) throw InputError("cone has no facets");
  for (const auto& g : generators_) {
    bool tight = false;
    for (const auto& f : facets_) {
      int s = dot(f, g).sign();
      if (s < 0) throw InputError("generator " + str(g) + " violates facet " + str(f));
      tight = tight || s == 0;
    }
    if (n_ >= 2 && !tight) throw InputError("generator " + str(g) + " is not on the boundary");
  }
}

bool cone_contains(const Cone& k, const Vec& x) {
  if (static_cast<int>(x.size()) != k.dim()) throw DimensionMismatch("point dimension differs from cone dimension");
  for (const auto& f : k.facets()) {
    if (dot(f, x).sign() < 0) return false;
  }
  return true;
}

bool cone_contains(const Cone& k, const IntVec& x) { return cone_contains(k, to_vec(x)); }

bool cone_interior(const Cone& k, const Vec& x) {
  if (static_cast<int>(x.size()) != k.dim()) throw DimensionMismatch("point dimension differs from cone dimension");
  for (const auto& f : k.facets()) {
    if (dot(f, x).sign() <= 0) return false;
  }
  return true;
}

std::vector<Vec> dual_facets_from_generators(const std::vector<Vec>& generators) {
  if (generators.empty()) throw InputError("no generators");
  int n = static_cast<int>(generators[0].size());
  if (n > 4) throw UnsupportedDimension("facet computation supports n <= 4");
  if (rank(generators) != n) throw InputError("generators are not full-dimensional");
  int m = static_cast<int>(generators.size());
  std::vector<Vec> facets;
  for_each_combination(m, n - 1, [&](const std::vector<int>& idx) {
    std::vector<Vec> rows;
    for (int i : idx) rows.push_back(generators[i]);
    if (rank(rows) != n - 1) return true;
    Vec normal = normal_of(rows, n);
    int pos = 0, neg = 0;
    for (const auto& g : generators) {
      int s = dot(normal, g).sign();
      pos += s > 0;
      neg += s < 0;
    }
    if (pos > 0 && neg > 0) return true;
    if (neg > 0) {
      for (auto& x : normal) x = -x;
    }
    normal = scale_if_rational(normal);
    bool dup = std::any_of(facets.begin(), facets.end(),
                           [&](const Vec& f) { return positively_proportional(f, normal); });
    if (!dup) facets.push_back(normal);
    return true;
  });
  // Cross-check: every facet is tight on n-1 independent generators.
  for (const auto& f : facets) {
    std::vector<Vec> tight;
    for (const auto& g : generators) {
      if (dot(f, g).is_zero()) tight.push_back(g);
    }
    if (rank(tight) != n - 1) throw Error("facet cross-check failed for " + str(f));
  }
  if (facets.empty()) throw InputError("generators span a cone without facets");
  return facets;
}

IntMatrix columns(const std::vector<IntVec>& vs) {
  if (vs.empty()) return {};
  IntMatrix m(vs[0].size(), IntVec(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) {
    for (std::size_t i = 0; i < vs[j].size(); ++i) m[i][j] = vs[j][i];
  }
  return m;
}

std::vector<IntVec> lattice_basis_in_cone(const Cone& k, int max_bound) {
  int n = k.dim();
  if (k.is_whole_space()) {
    std::vector<IntVec> basis;
    for (int i = 0; i < n; ++i) {
      IntVec e(n, 0);
      e[i] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  // Sign restrictions on coordinates implied by the generators.
  std::vector<int> lo(n), hi(n);
  for (int bound = 2; bound <= max_bound; bound *= 2) {
    for (int j = 0; j < n; ++j) {
      bool nonneg = true, nonpos = true;
      for (const auto& g : k.generators()) {
        nonneg = nonneg && g[j].sign() >= 0;
        nonpos = nonpos && g[j].sign() <= 0;
      }
      lo[j] = nonneg ? 0 : -bound;
      hi[j] = nonpos ? 0 : bound;
    }
    std::vector<IntVec> points;
    std::vector<long> z(lo.begin(), lo.end());
    while (true) {
      IntVec v(z.begin(), z.end());
      bool zero = std::all_of(z.begin(), z.end(), [](long c) { return c == 0; });
      if (!zero && primitive(v) == v && cone_contains(k, v)) points.push_back(v);
      int j = n - 1;
      while (j >= 0 && z[j] == hi[j]) {
        z[j] = lo[j];
        --j;
      }
      if (j < 0) break;
      ++z[j];
    }
    // Shortest first (Euclidean), ties broken lexicographically descending.
    auto norm2 = [](const IntVec& v) {
      Integer m = 0;
      for (const auto& x : v) m += x * x;
      return m;
    };
    std::stable_sort(points.begin(), points.end(), [&](const IntVec& a, const IntVec& b) {
      Integer na = norm2(a), nb = norm2(b);
      if (na != nb) return na < nb;
      return b < a;
    });
    std::vector<IntVec> chosen;
    std::function<bool(std::size_t)> dfs = [&](std::size_t start) -> bool {
      if (static_cast<int>(chosen.size()) == n) return true;
      for (std::size_t i = start; i < points.size(); ++i) {
        chosen.push_back(points[i]);
        if (gcd_of_minors(chosen, n) == 1 && dfs(i + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (dfs(0)) return chosen;
  }
  throw BudgetExhausted("no lattice basis found in K within sup-norm " + std::to_string(max_bound));
}

IRStatus ir_status(const Cone& k) {
  if (k.tag() == "sqrt2") return KnownNonIR{SymMatrix::from_rows({{-1, 0}, {0, 2}})};
  if (k.tag() == "e") return UnknownIR{};
  if (k.rationally_generated()) return GuaranteedIR{};
  return UnknownIR{};
}

std::string ir_status_name(const IRStatus& s) {
  if (std::holds_alternative<GuaranteedIR>(s)) return "GuaranteedIR";
  if (std::holds_alternative<KnownNonIR>(s)) return "KnownNonIR";
  return "Unknown";
}

std::vector<SimplicialPiece> simplicial_decomposition(const Cone& k) {
  int n = k.dim();
  if (n > 4) throw UnsupportedDimension("simplicial decomposition supports n <= 4");
  std::vector<SimplicialPiece> pieces;
  if (k.is_whole_space()) {
    // One piece per orthant; generators alternate +e_i, -e_i.
    for (int mask = 0; mask < (1 << n); ++mask) {
      SimplicialPiece p;
      for (int i = 0; i < n; ++i) p.generators.push_back(2 * i + ((mask >> i) & 1));
      pieces.push_back(p);
    }
    return pieces;
  }
  const auto& gens = k.generators();
  auto rank_of = [&](const std::vector<int>& idx) {
    Matrix m;
    for (int i : idx) m.push_back(gens[i]);
    return rank(m);
  };
  std::function<std::vector<std::vector<int>>(const std::vector<int>&, int)> pull =
      [&](const std::vector<int>& s, int dim) -> std::vector<std::vector<int>> {
    if (static_cast<int>(s.size()) == dim) return {s};
    int apex = s.front();
    std::vector<std::vector<int>> faces;
    for (const auto& f : k.facets()) {
      std::vector<int> t;
      for (int i : s) {
        if (dot(f, gens[i]).is_zero()) t.push_back(i);
      }
      if (std::find(t.begin(), t.end(), apex) != t.end()) continue;
      if (rank_of(t) != dim - 1) continue;
      if (std::find(faces.begin(), faces.end(), t) != faces.end()) continue;
      faces.push_back(t);
    }
    std::vector<std::vector<int>> out;
    for (const auto& t : faces) {
      for (auto sub : pull(t, dim - 1)) {
        sub.insert(sub.begin(), apex);
        out.push_back(sub);
      }
    }
    return out;
  };
  std::vector<int> all(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) all[i] = static_cast<int>(i);
  for (auto& s : pull(all, n)) pieces.push_back({s});
  return pieces;
}

}  // namespace perfekt
