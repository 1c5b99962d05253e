#pragma once

#include "ccdet/chart.hpp"

#include <string>
#include <vector>

namespace ccdet {

// Random composition of unipotent triangular shears u^i = x^i + g(other
// variables). Exactly invertible and centred (0 maps to 0); deterministic
// for a fixed seed.
Chart random_chart(int n, int degree_bound, int num_shears, unsigned seed);

// Constant-coefficient object expressed in a random chart; constant by
// construction, with the witnessing chart attached.
struct PositiveSample {
  Object obj;
  Chart chart;
};
std::vector<PositiveSample> positive_corpus(int n, int deg, Variance variance, int count, unsigned seed);

// Object with a certified nonzero obstruction: d(object) for forms,
// [V,V] for multivectors, exactly nonzero at the witness point.
struct NegativeSample {
  Object obj;
  std::string obstruction_kind; // "closedness" or "self-bracket"
  std::string witness;
  std::vector<Rational> witness_point;
};
std::vector<NegativeSample> negative_corpus(int n, int deg, Variance variance, int count, unsigned seed);

// Literal expansion into decomposable terms; test oracle for the
// optimized bracket.
MultiVector brute_force_sn_bracket(const MultiVector& A, const MultiVector& B);

} // namespace ccdet
