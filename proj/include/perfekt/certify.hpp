#pragma once

#include <optional>
#include <string>
#include <vector>

#include "perfekt/ryshkov.hpp"

namespace perfekt {

struct Membership {
  bool inside = false;
  /// Extra isotropic vectors first, then the minimal vectors.
  std::vector<Vec> generators;
  /// Inside: A = sum coefficients[i] * g_i g_i^T exactly.
  Vec coefficients;
  /// Outside: <H, g g^T> >= 0 for all generators and <H, A> < 0.
  SymMatrix separator;
};

Membership voronoi_membership(const SymMatrix& a, const std::vector<IntVec>& min_vectors,
                              const std::vector<Vec>& extra_isotropic = {});

enum class CertificateKind { Factorization, Separation, Inconclusive };

std::string kind_name(CertificateKind k);

struct Certificate {
  CertificateKind kind = CertificateKind::Inconclusive;
  // Factorization: A = sum alphas[i] * vectors[i] vectors[i]^T.
  std::vector<Scalar> alphas;
  std::vector<IntVec> vectors;
  // Separation: <A, q> < 0 with q in R_K ("vertex") or K-copositive ("ray").
  std::optional<SymMatrix> q;
  Scalar inner_product;
  std::string evidence;
  /// Vertices visited by the descent.
  int visited = 0;
  std::string report;
};

struct CertifyOptions {
  int budget = 1000;
  CopminOptions copmin;
};

/// Start vertex of the descent: the embedded A_n form scaled to minimum 1.
RyshkovVertex start_vertex(const Cone& k, const CopminOptions& opts = {});

Certificate factorize(const SymMatrix& a, const Cone& k, const CertifyOptions& opts = {});
Certificate nonmembership_certificate(const SymMatrix& a, const Cone& k, const CertifyOptions& opts = {});

/// Independent re-checks used before any certificate is returned.
bool verify_factorization(const SymMatrix& a, const Cone& k, const Certificate& c);
bool verify_separation(const SymMatrix& a, const Cone& k, const Certificate& c, const CopminOptions& opts = {});

}  // namespace perfekt
