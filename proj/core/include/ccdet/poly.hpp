#pragma once

#include "ccdet/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ccdet {

using Exponents = std::vector<unsigned>;

// Descending graded-lexicographic order: higher total degree first, ties
// broken lexicographically. Map iteration then yields the leading term
// first, which fixes canonical printing.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Exact multivariate polynomial over Rational in variables x1..xn.
// Invariant: no zero coefficients stored; all exponent vectors have
// length nvars().
class Poly {
public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int var); // 1-based

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial (0 for the zero polynomial).
  Rational constant_value() const;
  const TermMap& terms() const { return terms_; }
  // Total degree; -1 for the zero polynomial.
  long long total_degree() const;
  int degree_in(int var) const;
  bool depends_on(int var) const { return degree_in(var) > 0; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly operator*(const Rational& c) const;
  bool operator==(const Poly& o) const = default;

  Poly pow(unsigned k) const;
  Poly diff(int var) const;      // exact partial derivative, 1-based var
  Poly integrate(int var) const; // antiderivative vanishing at 0 in var
  // Substitute subst[k-1] for variable k; result lives in the substituted
  // polynomials' variable space.
  Poly compose(const std::vector<Poly>& subst) const;
  Rational eval(const std::vector<Rational>& point) const;
  // Substitute a single variable, keeping the same variable space.
  Poly substitute_var(int var, const Poly& value) const;

  void add_term(const Exponents& e, const Rational& c);

  std::string str() const;

private:
  int nvars_ = 0;
  TermMap terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

// Exact quotient when divisor divides dividend, std::nullopt otherwise.
std::optional<Poly> exact_divide(const Poly& a, const Poly& b);

// Multivariate gcd (primitive pseudo-remainder sequence), normalized to
// leading coefficient 1. gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_gcd(const std::vector<Poly>& ps);

} // namespace ccdet
