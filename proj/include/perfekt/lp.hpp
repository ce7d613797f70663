#pragma once

#include <vector>

#include "perfekt/matrix.hpp"

namespace perfekt {

enum class Sense { LessEq, GreaterEq, Equal };

/// max (or min) c.x subject to a_i.x (sense_i) b_i and x >= 0.
struct LPProblem {
  Matrix a;
  std::vector<Sense> sense;
  Vec b;
  Vec c;
  bool maximize = true;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Vec x;
  Scalar value;
  /// Infeasible: y with sum_i y_i a_ij <= 0 for all j, y_i <= 0 on <= rows,
  /// y_i >= 0 on >= rows, and y.b > 0.
  Vec farkas;
  /// Unbounded: d >= 0 with a_i.d (sense_i) 0 and c.d improving.
  Vec ray;
};

/// Two-phase simplex with Bland's rule; every certificate is re-verified
/// before returning.
LPResult lp_solve(const LPProblem& p);

bool verify_feasible(const LPProblem& p, const Vec& x);
bool verify_farkas(const LPProblem& p, const Vec& y);
bool verify_ray(const LPProblem& p, const Vec& d);

}  // namespace perfekt
