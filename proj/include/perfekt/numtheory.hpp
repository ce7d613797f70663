#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "perfekt/scalar.hpp"

namespace perfekt {

enum class CFSource { QuadraticIrrational, EulerE, FiniteRational };

struct ContinuedFraction {
  /// a_0, a_1, ...; a_i >= 1 for i >= 1.
  std::vector<Integer> quotients;
  CFSource source = CFSource::FiniteRational;
  /// Quadratic irrationals: quotients repeat from period_start with this length.
  std::optional<int> period_start;
  int period_length = 0;
};

/// First k partial quotients of x (fewer when x is rational and terminates).
ContinuedFraction cf_expand(const Scalar& x, int k);

/// e = [2; 1, 2, 1, 1, 4, 1, ...]: a_0 followed by a_1 .. a_k.
ContinuedFraction cf_of_e(int k);

struct Convergent {
  Integer p, q;
  int index = 0;
};

/// p_0/q_0 .. p_{k-1}/q_{k-1}; checks p_i q_{i-1} - p_{i-1} q_i = (-1)^{i-1}.
std::vector<Convergent> convergents(const ContinuedFraction& cf, int k);

/// Positive solutions of p^2 - 2 q^2 = -1 in increasing order.
std::vector<std::pair<Integer, Integer>> pell_negative_solutions(int count);

/// |sqrt2 - p/q| >= sqrt2 / (4 q^2), decided exactly.
bool badly_approx_check(const Integer& p, const Integer& q);

struct SimultaneousApprox {
  std::vector<Integer> p;
  Integer q;
};

/// Smallest q <= ceil(eps^-k) with |alpha_i - p_i/q| <= eps/q for all i.
SimultaneousApprox simultaneous_approx(const std::vector<Scalar>& alpha, const Rational& eps);

}  // namespace perfekt
