#pragma once

#include <optional>
#include <string>
#include <vector>

#include "perfekt/cone.hpp"
#include "perfekt/matrix.hpp"

namespace perfekt {

enum class MinStatus {
  Attained,
  /// Positive infimum that no integer vector reaches.
  InfimumNotAttained,
  InfimumZeroNotAttained,
  NegativeUnbounded,
  BoundaryUnsupported,
};

std::string status_name(MinStatus s);

/// K-copositive minimum of Q: inf Q[z] over z in K cap Z^n \ {0}.
struct MinResult {
  MinStatus status = MinStatus::BoundaryUnsupported;
  /// Minimum (Attained) or infimum (InfimumNotAttained).
  std::optional<Scalar> value;
  /// Lexicographically sorted; for isotropic minima only primitive directions.
  std::vector<IntVec> min_vectors;
  /// Set when the minimal set is infinite and min_vectors is a truncation.
  bool infinite = false;
  /// Integer point of K with Q[witness] < 0 (NegativeUnbounded), or a point
  /// below a requested threshold for infimum results.
  std::optional<IntVec> witness;
};

/// Exact minimum of Q over the slice {x in K : |x|_inf = 1}.
struct Margin {
  Scalar c;
  Vec argmin;
};

enum class Copositivity { StrictlyCopositive, CopositiveOnBoundary, NotCopositive };

std::string copositivity_name(Copositivity c);

struct CopminOptions {
  /// Largest allowed sup-norm of the enumeration box.
  long cap = 1'000'000;
  int workers = 1;
};

Margin positivity_margin(const SymMatrix& q, const Cone& k);

MinResult copositive_minimum(const SymMatrix& q, const Cone& k, const CopminOptions& opts = {});

struct CopositivityResult {
  Copositivity kind;
  Margin margin;
};

CopositivityResult is_K_copositive(const SymMatrix& q, const Cone& k);

/// Smallest integer B >= 0 with B^2 >= r (r >= 0).
Integer ceil_sqrt(const Scalar& r);

}  // namespace perfekt
