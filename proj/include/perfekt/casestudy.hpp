#pragma once

#include <string>
#include <vector>

#include "perfekt/certify.hpp"
#include "perfekt/ryshkov.hpp"

namespace perfekt {

struct CheckItem {
  std::string key;
  bool pass = false;
  std::string detail;
};

using Report = std::vector<CheckItem>;

bool all_pass(const Report& r);

// The sqrt2 cone K = cone{(sqrt2,1),(0,1)} and its 2-face F of COP_K: the
// matrices [[a, b], [b, c]] with c = -2a - 2 sqrt2 b, isotropic on (sqrt2,1).

SymMatrix face_matrix(const Scalar& a, const Scalar& b);
SymMatrix q1_matrix();
SymMatrix q2_matrix();
/// Direction of the Q1-Q2 edge, Q1 + lambda * D.
SymMatrix q1_q2_edge_direction();
/// sqrt2/4 + 1/2.
Scalar q1_q2_edge_length();

/// Direction of the ray of R_K cap F leaving Q2 with (0,1) tight.
SymMatrix q2_ray_direction();

/// Exact K-copositive minimum of a matrix of F over the sqrt2 cone. Infinite
/// minimal sets are truncated to negative-Pell vectors with q <= pell_bound.
MinResult face_minimum(const SymMatrix& q, const Scalar& below = Scalar(0), long pell_bound = 1000);
MinOracle face_oracle(long pell_bound = 1000);

/// Minimum 1 of Q1 with minimal vectors the negative-Pell solutions, q <= bound.
MinResult q1_minimum(long bound);

enum class BoundaryRay { Ray1, Ray2 };

/// Generator of a relative boundary ray of F.
SymMatrix boundary_ray_generator(BoundaryRay which);
/// Integer point of K with Q[z] <= eps for the ray generator Q.
IntVec boundary_ray_min_zero(BoundaryRay which, const Rational& eps);

/// Positive rational lower bound for Q[z] over K cap Z^2 \ {0}, for (a,b) in
/// the relative interior of F. Cross-checked by enumeration for q <= bound.
Rational interior_face_min_positive(const Scalar& a, const Scalar& b, long bound);

Report ryshkov_edge_and_rays_check(long bound = 200);
Report voronoi_insufficiency_check();

struct EEvidenceItem {
  Rational eps;
  Integer p, q;
  /// Certified upper bound on Q[(p,q)] for the e-face matrix.
  Rational upper;
  /// Certified lower bound on (-2ae - 2b) eps + a eps^2 / q^2; upper <= target.
  Rational target;
};

/// For the cone{(e,1),(0,1)} face matrix with parameters (a, b), finds
/// convergents of e with Q[(p,q)] <= (-2ae - 2b) eps, certified with
/// rational sandwiches of e. Successive items use later convergents with
/// strictly smaller certified values.
std::vector<EEvidenceItem> e_cone_ir_evidence(const Rational& a, const Rational& b, const std::vector<Rational>& eps);

/// n = 2: true iff every isotropic direction of Q in K lies on a boundary ray.
bool check_isotropic_boundary(const SymMatrix& q, const Cone& k);

/// Machine-readable sketch of R_K cap F: vertices, edges and rays with their
/// tight vectors.
struct FigureVertex {
  std::string name;
  SymMatrix q;
  std::vector<IntVec> tight;
  bool infinite = false;
  bool perfect = false;
};
struct FigureEdge {
  std::string from, to;
  SymMatrix direction;
  Scalar length;
  std::vector<IntVec> tight;
};
struct FigureRay {
  std::string from;
  SymMatrix direction;
  std::vector<IntVec> tight;
};
struct Sqrt2Figure {
  std::vector<FigureVertex> vertices;
  std::vector<FigureEdge> edges;
  std::vector<FigureRay> rays;
};
Sqrt2Figure sqrt2_figure();

/// Full sqrt2 case study report; `bound` limits the exhaustive cross-checks.
Report sqrt2_report(long bound = 500);
/// e-cone report for Q_params (-1, 0) and the given eps sequence.
Report e_report(const std::vector<Rational>& eps);

}  // namespace perfekt
