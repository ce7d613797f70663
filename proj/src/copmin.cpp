#include "perfekt/copmin.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <mutex>
#include <thread>

#include "perfekt/error.hpp"

namespace perfekt {

namespace {

struct Ineq {
  Vec a;
  Scalar b;  // a.x >= b
};

struct SliceMinimum {
  Scalar value;
  std::vector<Vec> points;  // all candidate minimizers found, first is argmin
};

void combinations(int m, int k, const std::function<void(const std::vector<int>&)>& f) {
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

// Enumerates the faces of every box face {x in K : x_i = s, |x_j| <= 1} and
// collects the stationary points of Q restricted to each face.
SliceMinimum slice_minimum(const SymMatrix& q, const Cone& k) {
  int n = k.dim();
  if (q.dim() != n) throw DimensionMismatch("matrix and cone dimensions differ");
  if (n > 4) throw UnsupportedDimension("copositive minimum supports n <= 4");
  std::optional<Scalar> best;
  std::vector<Vec> points;
  for (int i = 0; i < n; ++i) {
    for (int s : {1, -1}) {
      std::vector<Ineq> ineqs;
      for (const auto& f : k.facets()) ineqs.push_back({f, Scalar(0)});
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        Vec e(n);
        e[j] = -1;
        ineqs.push_back({e, Scalar(-1)});
        e[j] = 1;
        ineqs.push_back({e, Scalar(-1)});
      }
      int m = static_cast<int>(ineqs.size());
      for (int size = 0; size <= n - 1 && size <= m; ++size) {
        combinations(m, size, [&](const std::vector<int>& active) {
          Matrix rows;
          Vec rhs;
          Vec ei(n);
          ei[i] = 1;
          rows.push_back(ei);
          rhs.emplace_back(s);
          for (int a : active) {
            rows.push_back(ineqs[a].a);
            rhs.push_back(ineqs[a].b);
          }
          auto sol = solve_affine(rows, rhs, n);
          if (!sol) return;
          int free_dims = static_cast<int>(sol->directions.size());
          if (free_dims != n - static_cast<int>(rows.size())) return;  // dependent rows
          Vec x = sol->point;
          if (free_dims > 0) {
            const auto& dirs = sol->directions;
            Matrix h(free_dims, Vec(free_dims));
            Vec r(free_dims);
            for (int a = 0; a < free_dims; ++a) {
              for (int b = 0; b < free_dims; ++b) h[a][b] = bilinear(q, dirs[a], dirs[b]);
              r[a] = -bilinear(q, dirs[a], x);
            }
            auto y = solve(h, r);
            if (!y) return;
            for (int a = 0; a < free_dims; ++a) {
              for (int c = 0; c < n; ++c) x[c] += (*y)[a] * dirs[a][c];
            }
          }
          for (const auto& in : ineqs) {
            if ((dot(in.a, x) - in.b).sign() < 0) return;
          }
          Scalar v = quad_eval(q, x);
          if (!best || v < *best) {
            best = v;
            points.clear();
            points.push_back(x);
          } else if (v == *best && std::find(points.begin(), points.end(), x) == points.end()) {
            points.push_back(x);
          }
        });
      }
    }
  }
  if (!best) throw Error("slice of K is empty");
  return {*best, points};
}

// Q scaled to integers: Q[z] = (alpha + beta sqrt(d)) / den for integer z.
struct IntegerForm {
  int n = 0;
  int d = 0;
  Integer den = 1;
  std::vector<Integer> a, b;  // coefficient of z_i z_j (i <= j), off-diagonal doubled

  explicit IntegerForm(const SymMatrix& q) : n(q.dim()), d(q.field()) {
    for (const auto& x : q.coords()) {
      den = lcm(den, x.rational_part().get_den());
      den = lcm(den, x.irrational_part().get_den());
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        const Scalar& x = q(i, j);
        Rational ra = x.rational_part() * den, rb = x.irrational_part() * den;
        Integer fa = ra.get_num(), fb = rb.get_num();
        if (i != j) {
          fa *= 2;
          fb *= 2;
        }
        a.push_back(fa);
        b.push_back(fb);
      }
    }
  }

  void eval(const std::vector<long>& z, Integer& alpha, Integer& beta, Integer& tmp) const {
    alpha = 0;
    beta = 0;
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j, ++idx) {
        long p = z[i] * z[j];
        if (p == 0) continue;
        tmp = a[idx];
        tmp *= p;
        alpha += tmp;
        if (d != 0) {
          tmp = b[idx];
          tmp *= p;
          beta += tmp;
        }
      }
    }
  }

  Scalar value(const Integer& alpha, const Integer& beta) const {
    return Scalar(Rational(alpha, den), Rational(beta, den), d);
  }
};

struct IntegerFacet {
  std::vector<Integer> a, b;
  int d = 0;
};

std::vector<IntegerFacet> integer_facets(const Cone& k) {
  std::vector<IntegerFacet> out;
  for (const auto& f : k.facets()) {
    IntegerFacet g;
    Integer den = 1;
    for (const auto& x : f) {
      den = lcm(den, x.rational_part().get_den());
      den = lcm(den, x.irrational_part().get_den());
      g.d = common_field(g.d, x.radicand());
    }
    for (const auto& x : f) {
      g.a.push_back(Rational(x.rational_part() * den).get_num());
      g.b.push_back(Rational(x.irrational_part() * den).get_num());
    }
    out.push_back(std::move(g));
  }
  return out;
}

bool contains(const std::vector<IntegerFacet>& facets, const std::vector<long>& z, Integer& x, Integer& y) {
  for (const auto& f : facets) {
    x = 0;
    y = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (z[i] == 0) continue;
      x += f.a[i] * z[i];
      if (f.d != 0) y += f.b[i] * z[i];
    }
    if (sign_of(x, y, f.d) < 0) return false;
  }
  return true;
}

struct ShellBest {
  bool any = false;
  Integer alpha, beta;
  std::vector<std::vector<long>> points;
};

// Integer points of K with sup-norm exactly r and coordinate j the first
// with |z_j| = r, z_j = sj.
void scan_shell_part(const IntegerForm& form, const std::vector<IntegerFacet>& facets, const std::vector<int>& lo_sign,
                     const std::vector<int>& hi_sign, long r, int j, long sj, ShellBest& out) {
  int n = form.n;
  std::vector<long> lo(n), hi(n);
  for (int c = 0; c < n; ++c) {
    long l = lo_sign[c] * r, h = hi_sign[c] * r;
    if (c < j) {
      l = std::max(l, -r + 1);
      h = std::min(h, r - 1);
    }
    lo[c] = l;
    hi[c] = h;
  }
  lo[j] = hi[j] = sj;
  for (int c = 0; c < n; ++c) {
    if (lo[c] > hi[c]) return;
  }
  std::vector<long> z = lo;
  Integer alpha, beta, tmp, fx, fy;
  while (true) {
    if (contains(facets, z, fx, fy)) {
      form.eval(z, alpha, beta, tmp);
      int c = out.any ? sign_of(Integer(alpha - out.alpha), Integer(beta - out.beta), form.d) : -1;
      if (c < 0) {
        out.any = true;
        out.alpha = alpha;
        out.beta = beta;
        out.points.assign(1, z);
      } else if (c == 0) {
        out.points.push_back(z);
      }
    }
    int c = n - 1;
    while (c >= 0 && z[c] == hi[c]) {
      z[c] = lo[c];
      --c;
    }
    if (c < 0) break;
    ++z[c];
  }
}

std::optional<IntVec> rational_direction(const Vec& x) {
  for (const auto& v : x) {
    if (!v.is_rational()) return std::nullopt;
  }
  return primitive(x);
}

IntVec interior_integer_point(const Cone& k) {
  auto basis = lattice_basis_in_cone(k);
  int n = k.dim();
  IntVec w(n, 0);
  for (const auto& b : basis) {
    for (int i = 0; i < n; ++i) w[i] += b[i];
  }
  if (cone_interior(k, to_vec(w))) return w;
  for (long bound = 1; bound <= 64; bound *= 2) {
    std::vector<long> z(n, -bound);
    while (true) {
      IntVec v(z.begin(), z.end());
      if (cone_interior(k, to_vec(v))) return v;
      int c = n - 1;
      while (c >= 0 && z[c] == bound) {
        z[c] = -bound;
        --c;
      }
      if (c < 0) break;
      ++z[c];
    }
  }
  throw Error("no interior integer point found");
}

IntVec negative_witness(const SymMatrix& q, const Cone& k, const Vec& x) {
  if (auto z = rational_direction(x)) return *z;
  int n = k.dim();
  IntVec w = interior_integer_point(k);
  Integer t = 1;
  for (int step = 0; step < 200; ++step) {
    t *= 2;
    IntVec base(n);
    for (int i = 0; i < n; ++i) base[i] = (x[i] * Scalar(t)).round();
    for (int e = 0; e <= 16; ++e) {
      IntVec z(n);
      for (int i = 0; i < n; ++i) z[i] = base[i] + e * w[i];
      if (std::all_of(z.begin(), z.end(), [](const Integer& c) { return c == 0; })) continue;
      if (cone_contains(k, z) && quad_eval(q, z).sign() < 0) return z;
    }
  }
  throw Error("failed to round the negative slice point to an integer witness");
}

}  // namespace

std::string status_name(MinStatus s) {
  switch (s) {
    case MinStatus::Attained:
      return "Attained";
    case MinStatus::InfimumNotAttained:
      return "InfimumNotAttained";
    case MinStatus::InfimumZeroNotAttained:
      return "InfimumZeroNotAttained";
    case MinStatus::NegativeUnbounded:
      return "NegativeUnbounded";
    case MinStatus::BoundaryUnsupported:
      return "BoundaryUnsupported";
  }
  return "?";
}

std::string copositivity_name(Copositivity c) {
  switch (c) {
    case Copositivity::StrictlyCopositive:
      return "StrictlyCopositive";
    case Copositivity::CopositiveOnBoundary:
      return "CopositiveOnBoundary";
    case Copositivity::NotCopositive:
      return "NotCopositive";
  }
  return "?";
}

Integer ceil_sqrt(const Scalar& r) {
  if (r.sign() <= 0) return 0;
  Integer f = r.ceil();
  Integer s = sqrt(f);
  if (s * s < f) s += 1;
  return s;
}

Margin positivity_margin(const SymMatrix& q, const Cone& k) {
  auto sm = slice_minimum(q, k);
  return {sm.value, sm.points.front()};
}

CopositivityResult is_K_copositive(const SymMatrix& q, const Cone& k) {
  Margin m = positivity_margin(q, k);
  int s = m.c.sign();
  Copositivity kind = s > 0 ? Copositivity::StrictlyCopositive
                            : (s == 0 ? Copositivity::CopositiveOnBoundary : Copositivity::NotCopositive);
  return {kind, m};
}

MinResult copositive_minimum(const SymMatrix& q, const Cone& k, const CopminOptions& opts) {
  int n = k.dim();
  auto sm = slice_minimum(q, k);
  MinResult res;
  int s = sm.value.sign();
  if (s < 0) {
    res.status = MinStatus::NegativeUnbounded;
    res.witness = negative_witness(q, k, sm.points.front());
    return res;
  }
  if (s == 0) {
    std::vector<IntVec> dirs;
    for (const auto& p : sm.points) {
      if (auto z = rational_direction(p)) {
        if (std::find(dirs.begin(), dirs.end(), *z) == dirs.end()) dirs.push_back(*z);
      }
    }
    if (dirs.empty()) {
      res.status = MinStatus::BoundaryUnsupported;
      return res;
    }
    std::sort(dirs.begin(), dirs.end());
    res.status = MinStatus::Attained;
    res.value = Scalar(0);
    res.min_vectors = dirs;
    res.infinite = true;
    return res;
  }

  const Scalar& c = sm.value;
  // Initial upper bound from integer points known to lie in K.
  std::vector<IntVec> seeds = lattice_basis_in_cone(k);
  for (const auto& g : k.generators()) {
    if (is_integer_vec(g)) seeds.push_back(to_intvec(g));
  }
  Scalar m = quad_eval(q, seeds.front());
  for (const auto& v : seeds) m = std::min(m, quad_eval(q, v));
  Integer bound = ceil_sqrt(m / c);
  if (bound > opts.cap) {
    throw CapExceeded("enumeration box sup-norm " + to_string(bound) + " exceeds cap " + std::to_string(opts.cap));
  }

  IntegerForm form(q);
  auto facets = integer_facets(k);
  std::vector<int> lo_sign(n), hi_sign(n);
  for (int j = 0; j < n; ++j) {
    bool nonneg = true, nonpos = true;
    for (const auto& g : k.generators()) {
      nonneg = nonneg && g[j].sign() >= 0;
      nonpos = nonpos && g[j].sign() <= 0;
    }
    lo_sign[j] = nonneg ? 0 : -1;
    hi_sign[j] = nonpos ? 0 : 1;
  }

  ShellBest best;
  for (long r = 1; r <= bound.get_si(); ++r) {
    std::vector<std::pair<int, long>> parts;
    for (int j = 0; j < n; ++j) {
      for (long sj : {-r, r}) {
        if (sj < lo_sign[j] * r || sj > hi_sign[j] * r) continue;
        parts.emplace_back(j, sj);
      }
    }
    std::vector<ShellBest> results(parts.size());
    if (opts.workers > 1 && parts.size() > 1) {
      std::vector<std::future<void>> futs;
      std::size_t next = 0;
      std::mutex mu;
      int nthreads = std::min<int>(opts.workers, static_cast<int>(parts.size()));
      for (int t = 0; t < nthreads; ++t) {
        futs.push_back(std::async(std::launch::async, [&] {
          while (true) {
            std::size_t idx;
            {
              std::lock_guard<std::mutex> lock(mu);
              if (next >= parts.size()) return;
              idx = next++;
            }
            scan_shell_part(form, facets, lo_sign, hi_sign, r, parts[idx].first, parts[idx].second, results[idx]);
          }
        }));
      }
      for (auto& f : futs) f.get();
    } else {
      for (std::size_t idx = 0; idx < parts.size(); ++idx) {
        scan_shell_part(form, facets, lo_sign, hi_sign, r, parts[idx].first, parts[idx].second, results[idx]);
      }
    }
    // Merge in a fixed order so the result does not depend on scheduling.
    for (auto& part : results) {
      if (!part.any) continue;
      int cmpv = best.any ? sign_of(Integer(part.alpha - best.alpha), Integer(part.beta - best.beta), form.d) : -1;
      if (cmpv < 0) {
        best = std::move(part);
      } else if (cmpv == 0) {
        best.points.insert(best.points.end(), part.points.begin(), part.points.end());
      }
    }
    if (best.any) {
      Scalar cur = form.value(best.alpha, best.beta);
      if (cur < m) m = cur;
      bound = std::min(bound, ceil_sqrt(m / c));
    }
  }
  if (!best.any) throw Error("enumeration found no integer point in K");
  res.status = MinStatus::Attained;
  res.value = form.value(best.alpha, best.beta);
  for (const auto& p : best.points) res.min_vectors.emplace_back(p.begin(), p.end());
  std::sort(res.min_vectors.begin(), res.min_vectors.end());
  return res;
}

}  // namespace perfekt
