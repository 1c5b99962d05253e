#pragma once

#include "ccdet/connection.hpp"
#include "ccdet/exterior.hpp"
#include "ccdet/linalg.hpp"

#include <map>
#include <utility>
#include <vector>

namespace ccdet {

// Unknown Christoffel symbol Gamma^a_{bc}; symmetry in the lower pair is
// imposed up front, so keys are normalized to b <= c.
struct GammaKey {
  int a = 0, b = 0, c = 0;
  auto operator<=>(const GammaKey&) const = default;
};

GammaKey make_gamma_key(int a, int b, int c);

// Linear expression in the Gamma unknowns with Poly coefficients.
using GammaLinear = std::map<GammaKey, Poly>;

// Substitutes concrete symbols into a linear expression.
Poly eval_gamma_linear(const GammaLinear& e, const Connection& g);

using RowKey = std::pair<int, MultiIndex>; // (j, J)

// Linear system rows(Gamma) = rhs whose solvability in symmetric Gamma is
// necessary for the input object to have constant coefficients.
struct GammaSystem {
  int n = 0;
  int degree = 0;
  Variance variance = Variance::Covariant;
  std::vector<GammaKey> unknowns;   // ordered, size n^2(n+1)/2
  std::vector<RowKey> row_keys;     // size n * C(n, degree)
  std::vector<GammaLinear> rows;    // lhs, parallel to row_keys
  std::vector<Poly> rhs;            // parallel to row_keys

  // Numeric coefficient matrix and rhs at a point.
  QMatrix matrix_at(const QVector& point) const;
  QVector rhs_at(const QVector& point) const;
};

// Connection action on coefficients, linear in unknown symmetric Gamma.
// Covariant: Phi_{j,J} = sum_{s,h} Gamma^h_{j j_s} F_{J[s->h]} with the
// antisymmetric extension of F. Contravariant: coefficient Gamma^{j_s}_{j h}.
std::map<RowKey, GammaLinear> assemble_phi(const DiffForm& a);
std::map<RowKey, GammaLinear> assemble_phi(const MultiVector& V);

// Equations dF_J/dx^j = Phi_{j,J} (covariant) or dF_J/dx^j = -Phi_{j,J}
// (contravariant), rearranged to Phi = rhs.
GammaSystem assemble_system(const DiffForm& a);
GammaSystem assemble_system(const MultiVector& V);

struct RankReport {
  QVector point;
  int rank_M = 0;
  int rank_M_aug = 0;
  bool consistent = false;
};

// Exact ranks of the numeric system at each point (Rouche-Capelli check).
std::vector<RankReport> rank_analysis(const GammaSystem& sys, const std::vector<QVector>& points);

} // namespace ccdet
