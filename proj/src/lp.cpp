#include "perfekt/lp.hpp"

#include "perfekt/error.hpp"

namespace perfekt {

namespace {

struct Tableau {
  int m = 0, cols = 0;
  std::vector<Vec> t;
  Vec rhs;
  std::vector<int> basis;
  std::vector<bool> enabled;

  void pivot(int r, int j) {
    Scalar inv = Scalar(1) / t[r][j];
    for (auto& v : t[r]) v = v * inv;
    rhs[r] = rhs[r] * inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || t[i][j].is_zero()) continue;
      Scalar f = t[i][j];
      for (int k = 0; k < cols; ++k) {
        if (!t[r][k].is_zero()) t[i][k] = t[i][k] - f * t[r][k];
      }
      rhs[i] = rhs[i] - f * rhs[r];
    }
    basis[r] = j;
  }

  Scalar reduced_cost(const Vec& cost, int j) const {
    Scalar s = cost[j];
    for (int i = 0; i < m; ++i) {
      if (!t[i][j].is_zero()) s = s - cost[basis[i]] * t[i][j];
    }
    return s;
  }

  // Minimizes cost. Returns the entering column of an unbounded direction,
  // or -1 at optimality.
  int minimize(const Vec& cost) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < cols; ++j) {
        if (!enabled[j]) continue;
        if (reduced_cost(cost, j).sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return -1;
      int leave = -1;
      Scalar best;
      for (int i = 0; i < m; ++i) {
        if (t[i][enter].sign() <= 0) continue;
        Scalar ratio = rhs[i] / t[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return enter;
      pivot(leave, enter);
    }
  }

  Scalar objective(const Vec& cost) const {
    Scalar s(0);
    for (int i = 0; i < m; ++i) s = s + cost[basis[i]] * rhs[i];
    return s;
  }
};

bool check_sense(Sense s, const Scalar& lhs, const Scalar& rhs) {
  switch (s) {
    case Sense::LessEq:
      return lhs <= rhs;
    case Sense::GreaterEq:
      return lhs >= rhs;
    case Sense::Equal:
      return lhs == rhs;
  }
  return false;
}

void check_shape(const LPProblem& p) {
  std::size_t n = p.c.size();
  if (p.a.size() != p.b.size() || p.a.size() != p.sense.size()) {
    throw DimensionMismatch("LP row data have inconsistent lengths");
  }
  for (const auto& row : p.a) {
    if (row.size() != n) throw DimensionMismatch("LP constraint row length differs from objective length");
  }
}

}  // namespace

bool verify_feasible(const LPProblem& p, const Vec& x) {
  if (x.size() != p.c.size()) return false;
  for (const auto& v : x) {
    if (v.sign() < 0) return false;
  }
  for (std::size_t i = 0; i < p.a.size(); ++i) {
    if (!check_sense(p.sense[i], dot(p.a[i], x), p.b[i])) return false;
  }
  return true;
}

bool verify_farkas(const LPProblem& p, const Vec& y) {
  if (y.size() != p.a.size()) return false;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (p.sense[i] == Sense::LessEq && y[i].sign() > 0) return false;
    if (p.sense[i] == Sense::GreaterEq && y[i].sign() < 0) return false;
  }
  for (std::size_t j = 0; j < p.c.size(); ++j) {
    Scalar s(0);
    for (std::size_t i = 0; i < y.size(); ++i) s = s + y[i] * p.a[i][j];
    if (s.sign() > 0) return false;
  }
  return dot(y, p.b).sign() > 0;
}

bool verify_ray(const LPProblem& p, const Vec& d) {
  if (d.size() != p.c.size()) return false;
  for (const auto& v : d) {
    if (v.sign() < 0) return false;
  }
  for (std::size_t i = 0; i < p.a.size(); ++i) {
    if (!check_sense(p.sense[i], dot(p.a[i], d), Scalar(0))) return false;
  }
  int s = dot(p.c, d).sign();
  return p.maximize ? s > 0 : s < 0;
}

LPResult lp_solve(const LPProblem& p) {
  check_shape(p);
  int m = static_cast<int>(p.a.size());
  int n = static_cast<int>(p.c.size());
  int slacks = 0;
  for (auto s : p.sense) slacks += s != Sense::Equal;

  Tableau tab;
  tab.m = m;
  tab.cols = n + slacks + m;
  tab.t.assign(m, Vec(tab.cols));
  tab.rhs.assign(m, Scalar(0));
  tab.basis.assign(m, 0);
  tab.enabled.assign(tab.cols, true);
  std::vector<int> sigma(m, 1);
  int slack = n;
  for (int i = 0; i < m; ++i) {
    sigma[i] = p.b[i].sign() < 0 ? -1 : 1;
    Scalar sg(sigma[i]);
    for (int j = 0; j < n; ++j) tab.t[i][j] = p.a[i][j] * sg;
    if (p.sense[i] != Sense::Equal) {
      tab.t[i][slack++] = Scalar(p.sense[i] == Sense::LessEq ? sigma[i] : -sigma[i]);
    }
    tab.rhs[i] = p.b[i] * sg;
    int art = n + slacks + i;
    tab.t[i][art] = Scalar(1);
    tab.basis[i] = art;
  }

  // Phase 1: minimize the sum of artificials.
  Vec cost1(tab.cols);
  for (int i = 0; i < m; ++i) cost1[n + slacks + i] = Scalar(1);
  tab.minimize(cost1);
  LPResult res;
  if (tab.objective(cost1).sign() > 0) {
    Vec y(m);
    for (int i = 0; i < m; ++i) {
      Scalar yi(0);
      for (int k = 0; k < m; ++k) yi = yi + cost1[tab.basis[k]] * tab.t[k][n + slacks + i];
      y[i] = yi * Scalar(sigma[i]);
    }
    if (!verify_farkas(p, y)) throw Error("internal: Farkas certificate failed verification");
    res.status = LPStatus::Infeasible;
    res.farkas = std::move(y);
    return res;
  }

  // Drive artificials out of the basis; rows where that is impossible are redundant.
  std::vector<int> keep;
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < n + slacks) {
      keep.push_back(i);
      continue;
    }
    int col = -1;
    for (int j = 0; j < n + slacks; ++j) {
      if (!tab.t[i][j].is_zero()) {
        col = j;
        break;
      }
    }
    if (col >= 0) {
      tab.pivot(i, col);
      keep.push_back(i);
    }
  }
  if (static_cast<int>(keep.size()) < m) {
    Tableau reduced = tab;
    reduced.m = static_cast<int>(keep.size());
    reduced.t.clear();
    reduced.rhs.clear();
    reduced.basis.clear();
    for (int i : keep) {
      reduced.t.push_back(tab.t[i]);
      reduced.rhs.push_back(tab.rhs[i]);
      reduced.basis.push_back(tab.basis[i]);
    }
    tab = std::move(reduced);
  }
  for (int j = n + slacks; j < tab.cols; ++j) tab.enabled[j] = false;

  // Phase 2.
  Vec cost2(tab.cols);
  for (int j = 0; j < n; ++j) cost2[j] = p.maximize ? -p.c[j] : p.c[j];
  int enter = tab.minimize(cost2);
  if (enter >= 0) {
    Vec full(tab.cols);
    full[enter] = Scalar(1);
    for (int i = 0; i < tab.m; ++i) full[tab.basis[i]] = -tab.t[i][enter];
    Vec d(full.begin(), full.begin() + n);
    if (!verify_ray(p, d)) throw Error("internal: unbounded ray failed verification");
    res.status = LPStatus::Unbounded;
    res.ray = std::move(d);
    return res;
  }
  Vec x(n);
  for (int i = 0; i < tab.m; ++i) {
    if (tab.basis[i] < n) x[tab.basis[i]] = tab.rhs[i];
  }
  if (!verify_feasible(p, x)) throw Error("internal: optimal point failed verification");
  res.status = LPStatus::Optimal;
  res.value = dot(p.c, x);
  res.x = std::move(x);
  return res;
}

}  // namespace perfekt
