#pragma once

#include "ccdet/report.hpp"

#include <optional>

namespace ccdet {

struct DetectConfig {
  QVector base;                // base point, origin when empty
  std::optional<Chart> chart;  // candidate witness chart
  int samples = 5;             // rank-analysis sample points
  unsigned seed = 12345;
  int bound = 10;              // numerator/denominator bound for samples
};

// Deterministic rational sample points with small entries.
std::vector<QVector> sample_points(int n, int count, unsigned seed, int bound);

// Decision engine. Runs degree-special shortcuts, necessary obstructions,
// the rank consistency screen, and finally chart verification.
DetectionReport detect(const DiffForm& a, const DetectConfig& cfg = {});
DetectionReport detect(const MultiVector& V, const DetectConfig& cfg = {});

// Conformal variant: a scalar-multiple-of-constant test.
DetectionReport detect_conformal(const DiffForm& a, const DetectConfig& cfg = {});
DetectionReport detect_conformal(const MultiVector& V, const DetectConfig& cfg = {});

// Special machinery for (n-1)-vector fields.
DetectionReport detect_vec_n_minus_1(const MultiVector& V, const DetectConfig& cfg = {},
                                     const std::optional<Connection>& derivation = std::nullopt);

// Kernel of the pointwise contraction map: covectors annihilating a
// multivector, or vectors annihilating a form.
std::vector<QVector> kernel_system(const MultiVector& V, const QVector& point);
std::vector<QVector> kernel_system(const DiffForm& a, const QVector& point);

// The (n-1)-vector first-order system E[j,l] plus the n=3 constraint data.
// `sys` identifies the symmetric unknowns (lower pair normalized), which
// introduces function-coefficient row dependencies whose compatibility
// conditions reproduce the bracket constraint. `raw_rows` keeps each
// occurrence Gamma^a_{bc} as written, where the coefficient matrix has
// maximal rank n^2 on the open set F_1 ... F_n != 0.
struct Nm1System {
  GammaSystem sys;              // n^2 rows keyed (j, {l})
  std::vector<GammaKey> raw_unknowns; // ordered lower pairs, no identification
  std::vector<GammaLinear> raw_rows;  // parallel to sys.row_keys
  Poly C;                       // n=3 only: -1/2 coefficient of [V,V]
  std::vector<Poly> constraints; // n=3 only: numerators of C1, C2, C3
  std::vector<std::string> notes;

  QMatrix raw_matrix_at(const QVector& point) const;
};
Nm1System nminus1_vector_system(const MultiVector& V);

// Ground truth per the definition: expresses obj in chart coordinates and
// checks every coefficient is constant.
struct VerifyResult {
  bool constant = false;
  Object residual; // non-constant part
};
VerifyResult verify_chart(const DiffForm& a, const Chart& chart);
VerifyResult verify_chart(const MultiVector& V, const Chart& chart);

// Constructive charts for the top-degree and exact-1-form cases. The
// returned chart carries a FORMAL marker when no polynomial inverse exists.
Chart chart_from_volume_form(const DiffForm& a, const QVector& base);
Chart chart_from_exact_1form(const DiffForm& a, const QVector& base);

} // namespace ccdet
