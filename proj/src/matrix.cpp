#include "perfekt/matrix.hpp"

#include <numeric>

#include "perfekt/error.hpp"

namespace perfekt {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m, int cols) {
  std::vector<int> pivots;
  int rows = static_cast<int>(m.size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (!m[i][c].is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    Scalar inv = Scalar(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (std::size_t k = c; k < m[i].size(); ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void check_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw DimensionMismatch(std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

Vec to_vec(const IntVec& v) {
  Vec r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

bool is_integer_vec(const Vec& v) {
  for (const auto& x : v) {
    if (!x.is_integer()) return false;
  }
  return true;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

IntVec to_intvec(const Vec& v) {
  IntVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.as_integer());
  return r;
}

Scalar dot(const Vec& x, const Vec& y) {
  check_same(x.size(), y.size(), "dot");
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

IntVec primitive(const IntVec& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return v;
  IntVec r;
  for (const auto& x : v) r.push_back(x / g);
  return r;
}

IntVec primitive(const Vec& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.as_rational().get_den());
  IntVec r;
  for (const auto& x : v) {
    Rational s = x.as_rational() * l;
    r.push_back(s.get_num());
  }
  return primitive(r);
}

std::string str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

std::string str(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

SymMatrix::SymMatrix(int n) : n_(n), entries_(sym_dim(n)) {
  if (n < 1) throw DimensionMismatch("matrix dimension must be >= 1");
}

SymMatrix SymMatrix::identity(int n) {
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

SymMatrix SymMatrix::from_rows(const Matrix& rows) {
  int n = static_cast<int>(rows.size());
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw InputError("matrix is not square");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw InputError("matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

SymMatrix SymMatrix::from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
  Matrix m;
  for (const auto& r : rows) m.emplace_back(r);
  return from_rows(m);
}

SymMatrix SymMatrix::outer(const Vec& x) {
  int n = static_cast<int>(x.size());
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) m.set(i, j, x[i] * x[j]);
  }
  return m;
}

SymMatrix SymMatrix::outer(const IntVec& x) { return outer(to_vec(x)); }

SymMatrix SymMatrix::from_coords(int n, const Vec& coords) {
  SymMatrix m(n);
  check_same(coords.size(), m.entries_.size(), "symmetric coordinates");
  m.entries_ = coords;
  return m;
}

Matrix SymMatrix::rows() const {
  Matrix r(n_, Vec(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) r[i][j] = (*this)(i, j);
  }
  return r;
}

bool SymMatrix::is_rational() const {
  for (const auto& x : entries_) {
    if (!x.is_rational()) return false;
  }
  return true;
}

int SymMatrix::field() const {
  int d = 0;
  for (const auto& x : entries_) d = common_field(d, x.radicand());
  return d;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& o) {
  if (n_ != o.n_) throw DimensionMismatch("matrix sum dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& o) {
  if (n_ != o.n_) throw DimensionMismatch("matrix difference dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

SymMatrix& SymMatrix::operator*=(const Scalar& s) {
  for (auto& x : entries_) x *= s;
  return *this;
}

bool lex_less(const SymMatrix& a, const SymMatrix& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  for (std::size_t k = 0; k < a.entries_.size(); ++k) {
    auto c = a.entries_[k] <=> b.entries_[k];
    if (c != 0) return c < 0;
  }
  return false;
}

std::string SymMatrix::str() const {
  std::string s = "[";
  for (int i = 0; i < n_; ++i) {
    s += i ? ", [" : "[";
    for (int j = 0; j < n_; ++j) s += (j ? ", " : "") + (*this)(i, j).str();
    s += "]";
  }
  return s + "]";
}

Scalar quad_eval(const SymMatrix& q, const Vec& z) {
  int n = q.dim();
  check_same(z.size(), static_cast<std::size_t>(n), "quad_eval");
  Scalar s;
  for (int i = 0; i < n; ++i) {
    if (z[i].is_zero()) continue;
    s += q(i, i) * z[i] * z[i];
    for (int j = i + 1; j < n; ++j) {
      if (z[j].is_zero()) continue;
      s += Scalar(2) * q(i, j) * z[i] * z[j];
    }
  }
  return s;
}

Scalar quad_eval(const SymMatrix& q, const IntVec& z) { return quad_eval(q, to_vec(z)); }

Scalar bilinear(const SymMatrix& q, const Vec& x, const Vec& y) {
  int n = q.dim();
  check_same(x.size(), static_cast<std::size_t>(n), "bilinear");
  check_same(y.size(), static_cast<std::size_t>(n), "bilinear");
  Scalar s;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s += x[i] * q(i, j) * y[j];
  }
  return s;
}

Scalar frobenius(const SymMatrix& a, const SymMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("frobenius dimension mismatch");
  Scalar s;
  int n = a.dim();
  for (int i = 0; i < n; ++i) {
    s += a(i, i) * b(i, i);
    for (int j = i + 1; j < n; ++j) s += Scalar(2) * a(i, j) * b(i, j);
  }
  return s;
}

SymMatrix congruence(const SymMatrix& q, const IntMatrix& u) {
  int n = q.dim();
  check_same(u.size(), static_cast<std::size_t>(n), "congruence");
  SymMatrix r(n);
  // column k of U is (u[0][k], ..., u[n-1][k])
  std::vector<Vec> cols(n, Vec(n));
  for (int i = 0; i < n; ++i) {
    check_same(u[i].size(), static_cast<std::size_t>(n), "congruence");
    for (int k = 0; k < n; ++k) cols[k][i] = Scalar(u[i][k]);
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) r.set(a, b, bilinear(q, cols[a], cols[b]));
  }
  return r;
}

Vec outer_functional(const IntVec& z) {
  int n = static_cast<int>(z.size());
  Vec w;
  w.reserve(sym_dim(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Integer v = z[i] * z[j];
      if (i != j) v *= 2;
      w.emplace_back(v);
    }
  }
  return w;
}

Vec outer_functional(const Vec& z) {
  int n = static_cast<int>(z.size());
  Vec w;
  w.reserve(sym_dim(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) w.push_back(i == j ? z[i] * z[j] : Scalar(2) * z[i] * z[j]);
  }
  return w;
}

SymMatrix q_an(int n) {
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m.set(i, i, 2);
    if (i + 1 < n) m.set(i, i + 1, -1);
  }
  return m;
}

int rank(Matrix m) {
  if (m.empty()) return 0;
  int cols = static_cast<int>(m[0].size());
  return static_cast<int>(rref(m, cols).size());
}

Scalar determinant(Matrix m) {
  int n = static_cast<int>(m.size());
  Scalar det(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i) {
      if (!m[i][c].is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) return Scalar(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      Scalar f = m[i][c] / m[c][c];
      for (int k = c; k < n; ++k) m[i][k] -= f * m[c][k];
    }
  }
  return det;
}

Integer determinant(const IntMatrix& m) {
  // Bareiss fraction-free elimination.
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] != 0) {
          p = i;
          break;
        }
      }
      if (p < 0) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<Vec> nullspace(Matrix m, int cols) {
  auto piv = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<AffineSolution> solve_affine(Matrix a, Vec b, int cols) {
  check_same(a.size(), b.size(), "solve_affine");
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  auto piv = rref(a, cols);
  for (std::size_t r = piv.size(); r < a.size(); ++r) {
    if (!a[r][cols].is_zero()) return std::nullopt;
  }
  AffineSolution s;
  s.point.assign(cols, Scalar());
  for (std::size_t r = 0; r < piv.size(); ++r) s.point[piv[r]] = a[r][cols];
  std::vector<bool> is_pivot(cols, false);
  for (int c : piv) is_pivot[c] = true;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
    s.directions.push_back(std::move(v));
  }
  return s;
}

std::optional<Vec> solve(Matrix a, Vec b) {
  int n = static_cast<int>(a.size());
  auto s = solve_affine(std::move(a), std::move(b), n);
  if (!s || !s->directions.empty()) return std::nullopt;
  return s->point;
}

IntMatrix transpose(const IntMatrix& m) {
  if (m.empty()) return m;
  IntMatrix t(m[0].size(), IntVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  }
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix r(n, IntVec(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    check_same(a[i].size(), k, "matrix product");
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  }
  return r;
}

IntVec apply(const IntMatrix& m, const IntVec& v) {
  IntVec r(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    check_same(m[i].size(), v.size(), "matrix-vector product");
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  }
  return r;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  int n = static_cast<int>(m.size());
  Matrix a(n, Vec(2 * n));
  for (int i = 0; i < n; ++i) {
    check_same(m[i].size(), static_cast<std::size_t>(n), "unimodular_inverse");
    for (int j = 0; j < n; ++j) a[i][j] = Scalar(m[i][j]);
    a[i][n + i] = 1;
  }
  Integer det = determinant(m);
  if (det != 1 && det != -1) throw PreconditionViolated("matrix is not unimodular");
  rref(a, n);
  IntMatrix inv(n, IntVec(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j].as_integer();
  }
  return inv;
}

}  // namespace perfekt
