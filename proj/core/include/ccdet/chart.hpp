#pragma once

#include "ccdet/exterior.hpp"

#include <vector>

namespace ccdet {

// Polynomial change of coordinates u = forward(x). A chart normally
// carries an explicit polynomial inverse; `formal` marks a chart whose
// inverse is not polynomial (only the forward map is usable then).
struct Chart {
  int n = 0;
  std::vector<Poly> forward;
  std::vector<Poly> inverse;
  bool formal = false;

  static Chart identity(int n);

  // Checks round trips inverse(forward(x)) == x and forward(inverse(u)) == u.
  // A formal chart only checks shape of the forward map.
  bool validate() const;

  Chart inverted() const; // throws for formal charts
};

// Jacobian of a polynomial map, entries J[h][i] = d map[h] / d x^i.
std::vector<std::vector<Poly>> jacobian(const std::vector<Poly>& map);

// Pullback along map: R^n_x -> R^n_u of a form living on the u side;
// coefficients are composed with the map and du^j expands through the
// Jacobian. The result lives on the x side.
DiffForm pullback(const DiffForm& a, const std::vector<Poly>& map);

// Form given in chart coordinates, expressed back in base coordinates.
DiffForm pullback(const DiffForm& a, const Chart& chart);

// Multivector given in base coordinates, expressed in chart coordinates.
// Needs the inverse, so formal charts are rejected.
MultiVector pushforward(const MultiVector& V, const Chart& chart);

} // namespace ccdet
