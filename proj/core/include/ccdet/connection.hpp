#pragma once

#include "ccdet/chart.hpp"

#include <string>
#include <vector>

namespace ccdet {

// Linear connection on R^n with polynomial Christoffel symbols
// Gamma^a_{bc} (a the upper index).
class Connection {
public:
  Connection() = default;
  explicit Connection(int n) : n_(n), gamma_(static_cast<size_t>(n) * n * n, Poly(n)) {}

  int n() const { return n_; }
  const Poly& gamma(int a, int b, int c) const { return gamma_[idx(a, b, c)]; }
  void set_gamma(int a, int b, int c, const Poly& p) { gamma_[idx(a, b, c)] = p; }

  bool operator==(const Connection& o) const = default;

private:
  size_t idx(int a, int b, int c) const;
  int n_ = 0;
  std::vector<Poly> gamma_;
};

// Christoffel symbols of the flat connection carried over from the chart
// coordinates: Gamma^b_{ij} = sum_h v^b_h d2 u^h / dx^i dx^j, where v is
// the Jacobian of the inverse evaluated along the forward map.
Connection christoffel_from_chart(const Chart& chart);

// Same connection computed without second derivatives of the forward map:
// Gamma^a_{cd} = - sum_b (d v^a_b / dx^d) (d u^b / dx^c).
Connection christoffel_from_chart_alt(const Chart& chart);

Poly torsion(const Connection& g, int a, int b, int c);
bool is_symmetric(const Connection& g);

// Curvature component R^a_{bcd}; a flat connection has all of them zero.
Poly curvature(const Connection& g, int a, int b, int c, int d);
bool is_flat(const Connection& g);

// Covariant derivative in the direction d/dx^j.
DiffForm covariant_derivative(const Connection& g, int j, const DiffForm& a);
MultiVector covariant_derivative(const Connection& g, int j, const MultiVector& V);

// One line per nonzero symbol: "Gamma[a][b][c] = <poly>".
std::string connection_str(const Connection& g);

} // namespace ccdet
