#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "perfekt/scalar.hpp"

namespace perfekt {

using Vec = std::vector<Scalar>;
using IntVec = std::vector<Integer>;
/// Dense row-major matrix over Scalars.
using Matrix = std::vector<Vec>;
/// Dense row-major integer matrix.
using IntMatrix = std::vector<IntVec>;

Vec to_vec(const IntVec& v);
/// Requires every entry to be an integer.
IntVec to_intvec(const Vec& v);
bool is_integer_vec(const Vec& v);
bool is_zero_vec(const Vec& v);

Scalar dot(const Vec& x, const Vec& y);

/// Scales a rational vector to the primitive integer vector on the same ray.
IntVec primitive(const Vec& v);
IntVec primitive(const IntVec& v);

std::string str(const Vec& v);
std::string str(const IntVec& v);

/// Symmetric n x n matrix stored as its upper triangle.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n);

  static SymMatrix identity(int n);
  /// Validates symmetry; throws InputError otherwise.
  static SymMatrix from_rows(const Matrix& rows);
  static SymMatrix from_rows(std::initializer_list<std::initializer_list<Scalar>> rows);
  static SymMatrix outer(const Vec& x);
  static SymMatrix outer(const IntVec& x);
  /// Inverse of coords(): entries in upper-triangle row order.
  static SymMatrix from_coords(int n, const Vec& coords);

  int dim() const { return n_; }
  const Scalar& operator()(int i, int j) const { return entries_[index(i, j)]; }
  void set(int i, int j, const Scalar& v) { entries_[index(i, j)] = v; }

  /// Upper triangle in row order: (0,0), (0,1), ..., (n-1,n-1).
  const Vec& coords() const { return entries_; }
  Matrix rows() const;

  bool is_rational() const;
  /// Common radicand of all entries (0 when rational).
  int field() const;

  SymMatrix& operator+=(const SymMatrix& o);
  SymMatrix& operator-=(const SymMatrix& o);
  SymMatrix& operator*=(const Scalar& s);
  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
  friend SymMatrix operator*(SymMatrix a, const Scalar& s) { return a *= s; }
  friend SymMatrix operator*(const Scalar& s, SymMatrix a) { return a *= s; }
  SymMatrix operator-() const { return *this * Scalar(-1); }

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;
  /// Lexicographic by value over coords().
  friend bool lex_less(const SymMatrix& a, const SymMatrix& b);

  std::string str() const;

 private:
  int index(int i, int j) const {
    if (i > j) std::swap(i, j);
    return i * n_ - i * (i - 1) / 2 + (j - i);
  }

  int n_ = 0;
  Vec entries_;
};

/// Number of independent entries of an n x n symmetric matrix.
constexpr int sym_dim(int n) { return n * (n + 1) / 2; }

/// z^T Q z.
Scalar quad_eval(const SymMatrix& q, const Vec& z);
Scalar quad_eval(const SymMatrix& q, const IntVec& z);
/// x^T Q y.
Scalar bilinear(const SymMatrix& q, const Vec& x, const Vec& y);
/// Sum over i, j of A_ij B_ij.
Scalar frobenius(const SymMatrix& a, const SymMatrix& b);
/// U^T Q U, where U is given by rows.
SymMatrix congruence(const SymMatrix& q, const IntMatrix& u);

/// Linear functional coefficients w with <X, z z^T> = w . coords(X).
Vec outer_functional(const IntVec& z);
Vec outer_functional(const Vec& z);

SymMatrix q_an(int n);

// Dense linear algebra over Scalars (exact Gaussian elimination).

int rank(Matrix m);
Scalar determinant(Matrix m);
Integer determinant(const IntMatrix& m);
/// Basis of {x : m x = 0}; m has `cols` columns.
std::vector<Vec> nullspace(Matrix m, int cols);
/// Unique solution of a square nonsingular system, or nullopt.
std::optional<Vec> solve(Matrix a, Vec b);

/// Affine solution set {x0 + N y} of A x = b.
struct AffineSolution {
  Vec point;
  std::vector<Vec> directions;
};
/// nullopt when inconsistent.
std::optional<AffineSolution> solve_affine(Matrix a, Vec b, int cols);

IntMatrix transpose(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
/// Integer inverse of a unimodular matrix; throws PreconditionViolated otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);
IntVec apply(const IntMatrix& m, const IntVec& v);

}  // namespace perfekt
