#include "ccdet/oracle.hpp"

#include "ccdet/detector.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ccdet {

namespace {

// Random polynomial in the variables other than `avoid`, without constant
// term, small integer coefficients.
Poly random_shear_poly(int n, int avoid, int degree_bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<int> deg(1, degree_bound);
  std::uniform_int_distribution<int> var(1, n);
  Poly g(n);
  const int terms = n > 1 ? nterms(rng) : 0;
  for (int t = 0; t < terms; ++t) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    Exponents e(n, 0);
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) {
      int v = var(rng);
      while (v == avoid) v = var(rng);
      ++e[v - 1];
    }
    g.add_term(e, c);
  }
  return g;
}

Poly random_poly(int n, int degree_bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<int> deg(0, degree_bound);
  std::uniform_int_distribution<int> var(1, n);
  Poly g(n);
  const int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    Exponents e(n, 0);
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) ++e[var(rng) - 1];
    g.add_term(e, coeff(rng));
  }
  return g;
}

} // namespace

Chart random_chart(int n, int degree_bound, int num_shears, unsigned seed) {
  if (n < 1 || degree_bound < 1) throw std::invalid_argument("random_chart: bad parameters");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> var(1, n);
  Chart c = Chart::identity(n);
  for (int s = 0; s < num_shears; ++s) {
    const int i = var(rng);
    Poly g = random_shear_poly(n, i, degree_bound, rng);
    // forward := shear o forward
    c.forward[i - 1] += g.compose(c.forward);
    // inverse := inverse o shear^{-1}
    std::vector<Poly> sinv;
    for (int j = 1; j <= n; ++j) sinv.push_back(Poly::variable(n, j));
    sinv[i - 1] -= g;
    for (auto& p : c.inverse) p = p.compose(sinv);
  }
  return c;
}

std::vector<PositiveSample> positive_corpus(int n, int deg, Variance variance, int count, unsigned seed) {
  if (deg < 1 || deg > n) throw std::invalid_argument("positive_corpus: degree out of range");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> shears(1, 3);
  std::uniform_int_distribution<unsigned> sub(0, 1u << 30);
  std::vector<PositiveSample> out;
  auto idxs = all_multi_indices(n, deg);
  while (static_cast<int>(out.size()) < count) {
    std::vector<Rational> lambda;
    bool nonzero = false;
    for (size_t i = 0; i < idxs.size(); ++i) {
      int c = coeff(rng);
      nonzero = nonzero || c != 0;
      lambda.emplace_back(c);
    }
    if (!nonzero) continue;
    Chart chart = random_chart(n, 2, shears(rng), sub(rng));
    if (variance == Variance::Covariant) {
      DiffForm c(n, deg);
      for (size_t i = 0; i < idxs.size(); ++i) c.add(idxs[i], Poly::constant(n, lambda[i]));
      out.push_back({Object(pullback(c, chart.forward)), chart});
    } else {
      MultiVector c(n, deg);
      for (size_t i = 0; i < idxs.size(); ++i) c.add(idxs[i], Poly::constant(n, lambda[i]));
      out.push_back({Object(pushforward(c, chart.inverted())), chart});
    }
  }
  return out;
}

std::vector<NegativeSample> negative_corpus(int n, int deg, Variance variance, int count, unsigned seed) {
  if (deg < 1 || deg > n) throw std::invalid_argument("negative_corpus: degree out of range");
  if (variance == Variance::Covariant && deg == n)
    throw std::invalid_argument("negative_corpus: top-degree forms have no closedness obstruction");
  if (variance == Variance::Contravariant && (deg < 2 || deg % 2 != 0 || 2 * deg - 1 > n))
    throw std::invalid_argument("negative_corpus: self-bracket vanishes identically for this degree");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> sub(0, 1u << 30);
  std::vector<NegativeSample> out;
  auto idxs = all_multi_indices(n, deg);
  int retries = 0;
  const int max_retries = 200 * count + 200;
  while (static_cast<int>(out.size()) < count) {
    if (++retries > max_retries) throw std::runtime_error("negative_corpus: retry budget exhausted");
    auto pts = sample_points(n, 6, sub(rng), 5);
    pts.insert(pts.begin(), QVector(n, 0));
    if (variance == Variance::Covariant) {
      DiffForm a(n, deg);
      for (const auto& I : idxs) a.add(I, random_poly(n, 2, rng));
      DiffForm d = exterior_derivative(a);
      if (d.is_zero()) continue;
      for (const auto& pt : pts) {
        auto vals = eval_coeffs(d, pt);
        if (std::any_of(vals.begin(), vals.end(), [](const Rational& r) { return r != 0; })) {
          out.push_back({Object(a), "closedness", d.str(), pt});
          break;
        }
      }
    } else {
      MultiVector v(n, deg);
      for (const auto& I : idxs) v.add(I, random_poly(n, 2, rng));
      MultiVector br = schouten_bracket(v, v);
      if (br.is_zero()) continue;
      for (const auto& pt : pts) {
        auto vals = eval_coeffs(br, pt);
        if (std::any_of(vals.begin(), vals.end(), [](const Rational& r) { return r != 0; })) {
          out.push_back({Object(v), "self-bracket", br.str(), pt});
          break;
        }
      }
    }
  }
  return out;
}

MultiVector brute_force_sn_bracket(const MultiVector& A, const MultiVector& B) {
  if (A.n() != B.n()) throw std::invalid_argument("brute_force_sn_bracket: dimension mismatch");
  const int n = A.n();
  const int q = A.degree(), r = B.degree();
  if (q < 1 || r < 1) throw std::invalid_argument("brute_force_sn_bracket: degrees must be >= 1");
  const int out_deg = q + r - 1 > n ? n : q + r - 1;
  MultiVector result(n, out_deg);
  for (const auto& [I, f] : A.coeffs())
    for (const auto& [J, g] : B.coeffs()) {
      // Decomposable pieces (f dX_{i1}) ^ dX_{i2} ^ ... and same for B.
      std::vector<MultiVector> X, Y;
      for (size_t s = 0; s < I.size(); ++s)
        X.push_back(s == 0 ? MultiVector::monomial(n, {I[s]}, f) : MultiVector::basis(n, {I[s]}));
      for (size_t s = 0; s < J.size(); ++s)
        Y.push_back(s == 0 ? MultiVector::monomial(n, {J[s]}, g) : MultiVector::basis(n, {J[s]}));
      for (int i = 1; i <= q; ++i)
        for (int j = 1; j <= r; ++j) {
          MultiVector term = lie_bracket(X[i - 1], Y[j - 1]);
          for (int s = 1; s <= q; ++s)
            if (s != i) term = wedge(term, X[s - 1]);
          for (int s = 1; s <= r; ++s)
            if (s != j) term = wedge(term, Y[s - 1]);
          if (term.degree() != out_deg) continue; // wedge degenerated past top degree
          result = result + term * Rational((i + j) % 2 == 0 ? 1 : -1);
        }
    }
  return result;
}

} // namespace ccdet
