#pragma once

#include "ccdet/multiindex.hpp"
#include "ccdet/poly.hpp"

#include <map>
#include <string>
#include <variant>

namespace ccdet {

enum class Variance { Covariant, Contravariant };

// Degree-homogeneous exterior object with Poly coefficients: a
// differential p-form (Covariant) or q-vector field (Contravariant)
// on R^n. Absent multi-index means zero coefficient.
template <Variance V>
class Exterior {
public:
  Exterior() = default;
  Exterior(int n, int degree) : n_(n), degree_(degree) {}

  int n() const { return n_; }
  int degree() const { return degree_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<MultiIndex, Poly>& coeffs() const { return coeffs_; }

  const Poly& coeff(const MultiIndex& I) const;
  void add(const MultiIndex& I, const Poly& c);
  // Adds c * basis(tuple), normalizing the tuple by the wedge sign rules.
  void add_tuple(const std::vector<int>& tuple, const Poly& c);

  Exterior operator+(const Exterior& o) const;
  Exterior operator-(const Exterior& o) const;
  Exterior operator-() const;
  Exterior operator*(const Poly& f) const;
  Exterior operator*(const Rational& c) const;
  bool operator==(const Exterior& o) const = default;

  // Single basis monomial c * (d)x[I].
  static Exterior monomial(int n, const MultiIndex& I, const Poly& c);
  static Exterior basis(int n, const MultiIndex& I);

  std::string str() const;

private:
  int n_ = 0;
  int degree_ = 0;
  std::map<MultiIndex, Poly> coeffs_;
};

using DiffForm = Exterior<Variance::Covariant>;
using MultiVector = Exterior<Variance::Contravariant>;

// Either kind of object, as accepted by the parser and the detector.
using Object = std::variant<DiffForm, MultiVector>;

template <Variance V>
Exterior<V> wedge(const Exterior<V>& a, const Exterior<V>& b);

DiffForm exterior_derivative(const DiffForm& a);

// Contraction in the first slot.
DiffForm interior_vec_form(const MultiVector& X, const DiffForm& a); // deg(X) == 1
MultiVector interior_form_vec(const DiffForm& w, const MultiVector& V); // deg(w) == 1

// Volume-form dualities (iterated first-slot contractions).
DiffForm iota_pq(const MultiVector& V, const DiffForm& vol);       // q-vector -> (n-q)-form
MultiVector iota_star_qp(const DiffForm& w, const MultiVector& Vn); // p-form -> (n-p)-vector

MultiVector lie_bracket(const MultiVector& X, const MultiVector& Y); // degrees 1,1
MultiVector schouten_bracket(const MultiVector& A, const MultiVector& B);

// Pointwise evaluation: coefficients of the object at a rational point,
// ordered by all_multi_indices(n, degree).
template <Variance V>
std::vector<Rational> eval_coeffs(const Exterior<V>& a, const std::vector<Rational>& point);

} // namespace ccdet
