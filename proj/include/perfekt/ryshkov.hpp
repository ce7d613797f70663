#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "perfekt/copmin.hpp"

namespace perfekt {

/// Dimension of span{v v^T} in the space of symmetric matrices.
int voronoi_cone_rank(const std::vector<IntVec>& vectors);

struct PerfectResult {
  bool perfect = false;
  /// Input scaled so that its minimum is 1.
  SymMatrix q;
  std::vector<IntVec> min_vectors;
  int rank = 0;
  /// n(n+1)/2 minimal vectors with independent outer products (perfect only).
  std::vector<IntVec> rank_witness;
};

/// Throws BoundaryUnsupported when the minimum cannot be certified generically.
PerfectResult is_perfect(const SymMatrix& q, const Cone& k, const CopminOptions& opts = {});
/// Same test on an externally certified minimum and minimal vectors.
PerfectResult is_perfect(const SymMatrix& q, const Scalar& minimum, const std::vector<IntVec>& min_vectors);

struct RyshkovVertex {
  SymMatrix q;
  std::vector<IntVec> min_vectors;
  bool perfect = false;
  /// Minimal set is infinite; min_vectors is a truncation.
  bool infinite = false;
};

/// Minimum oracle: returns the K-copositive minimum of its argument. When the
/// infimum is below `below`, the result must carry an integer point of K
/// with value < below (in min_vectors or witness).
using MinOracle = std::function<MinResult(const SymMatrix& q, const Scalar& below)>;

MinOracle generic_oracle(const Cone& k, const CopminOptions& opts = {});

/// Vertex of R_K from a matrix with K-copositive minimum 1.
RyshkovVertex make_vertex(const SymMatrix& q, const MinOracle& oracle);

/// Extreme rays of the tangent cone {X : <X, v v^T> >= 0 for all minimal v}
/// at a perfect vertex, normalized and lexicographically sorted.
std::vector<SymMatrix> vertex_edges(const RyshkovVertex& v);

struct ExtremeRayDirection {
  SymMatrix direction;
};

struct NeighborResult {
  std::variant<RyshkovVertex, ExtremeRayDirection> result;
  /// Step length t* (vertex case).
  std::optional<Scalar> step;
};

NeighborResult neighbor(const RyshkovVertex& v, const SymMatrix& d, const Cone& k, const MinOracle& oracle);
NeighborResult neighbor(const RyshkovVertex& v, const SymMatrix& d, const Cone& k, const CopminOptions& opts = {});

struct TraversalResult {
  std::vector<RyshkovVertex> vertices;
  /// Rays met at expanded vertices, as (vertex index, direction).
  std::vector<std::pair<int, SymMatrix>> rays;
  /// Budget ran out with unexpanded vertices left.
  bool budget_exhausted = false;
};

/// Breadth-first search over R_K vertices. `budget` bounds the number of
/// expanded vertices. Vertices equal up to the group generated by `symmetry`
/// (integer matrices acting by U^T Q U) are merged.
TraversalResult traverse(const RyshkovVertex& start, const Cone& k, int budget,
                         const std::vector<IntMatrix>& symmetry = {}, const CopminOptions& opts = {});

/// U^{-T} Q U^{-1} with the columns of U a lattice basis inside K, so the
/// minimal vectors of Q are carried into K. Validated as perfect over K.
SymMatrix embed_perfect(const SymMatrix& q_classical, const Cone& k, const CopminOptions& opts = {});

}  // namespace perfekt
