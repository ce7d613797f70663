#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "perfekt/matrix.hpp"

namespace perfekt {

/// Full-dimensional closed convex cone K in R^n, kept in both V- and
/// H-representation: K = cone(generators) = {x : f.x >= 0 for all facets f}.
///
/// The whole space R^n is represented with tag "classical", generators
/// +-e_i and no facets.
class Cone {
 public:
  /// Computes facets from generators (see dual_facets_from_generators).
  static Cone from_generators(std::vector<Vec> generators, std::optional<bool> rationally_generated = {},
                              std::string tag = "custom");
  /// Uses the given facets after validating both representations.
  static Cone from_representation(std::vector<Vec> generators, std::vector<Vec> facets, bool rationally_generated,
                                  std::string tag = "custom");

  static Cone orthant(int n);
  static Cone classical(int n);
  /// cone{(sqrt 2, 1), (0, 1)}.
  static Cone sqrt2();

  int dim() const { return n_; }
  const std::vector<Vec>& generators() const { return generators_; }
  const std::vector<Vec>& facets() const { return facets_; }
  bool rationally_generated() const { return rationally_generated_; }
  const std::string& tag() const { return tag_; }
  bool is_whole_space() const { return tag_ == "classical"; }
  /// Common radicand of all generator and facet data.
  int field() const;

 private:
  Cone() = default;
  void validate() const;

  int n_ = 0;
  std::vector<Vec> generators_;
  std::vector<Vec> facets_;
  bool rationally_generated_ = false;
  std::string tag_;
};

bool cone_contains(const Cone& k, const Vec& x);
bool cone_contains(const Cone& k, const IntVec& x);
/// True iff x satisfies every facet inequality strictly.
bool cone_interior(const Cone& k, const Vec& x);

/// Inward facet normals of cone(generators); rational normals are scaled
/// to primitive integer vectors.
std::vector<Vec> dual_facets_from_generators(const std::vector<Vec>& generators);

/// n integer vectors in K forming a basis of Z^n, returned as the list of
/// basis vectors. Searches sup-norm boxes of size 2, 4, ... up to max_bound.
std::vector<IntVec> lattice_basis_in_cone(const Cone& k, int max_bound = 64);

struct GuaranteedIR {};
struct KnownNonIR {
  SymMatrix witness;
};
struct UnknownIR {};
using IRStatus = std::variant<GuaranteedIR, KnownNonIR, UnknownIR>;

IRStatus ir_status(const Cone& k);
std::string ir_status_name(const IRStatus& s);

/// Indices into k.generators() of a linearly independent subset.
struct SimplicialPiece {
  std::vector<int> generators;
};

/// Pulling triangulation of K into simplicial cones.
std::vector<SimplicialPiece> simplicial_decomposition(const Cone& k);

/// Matrix whose columns are the given vectors.
IntMatrix columns(const std::vector<IntVec>& vs);

}  // namespace perfekt
