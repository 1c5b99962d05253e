#include "ccdet/chart.hpp"

#include <stdexcept>

namespace ccdet {

Chart Chart::identity(int n) {
  Chart c;
  c.n = n;
  for (int i = 1; i <= n; ++i) {
    c.forward.push_back(Poly::variable(n, i));
    c.inverse.push_back(Poly::variable(n, i));
  }
  return c;
}

bool Chart::validate() const {
  if (n <= 0 || static_cast<int>(forward.size()) != n) return false;
  for (const auto& p : forward)
    if (p.nvars() != n) return false;
  if (formal) return inverse.empty();
  if (static_cast<int>(inverse.size()) != n) return false;
  for (const auto& p : inverse)
    if (p.nvars() != n) return false;
  for (int i = 1; i <= n; ++i) {
    if (inverse[i - 1].compose(forward) != Poly::variable(n, i)) return false;
    if (forward[i - 1].compose(inverse) != Poly::variable(n, i)) return false;
  }
  return true;
}

Chart Chart::inverted() const {
  if (formal) throw std::invalid_argument("Chart::inverted: no polynomial inverse");
  Chart c;
  c.n = n;
  c.forward = inverse;
  c.inverse = forward;
  return c;
}

std::vector<std::vector<Poly>> jacobian(const std::vector<Poly>& map) {
  const int n = static_cast<int>(map.size());
  std::vector<std::vector<Poly>> J(n, std::vector<Poly>(n));
  for (int h = 0; h < n; ++h)
    for (int i = 0; i < n; ++i) J[h][i] = map[h].diff(i + 1);
  return J;
}

DiffForm pullback(const DiffForm& a, const std::vector<Poly>& map) {
  const int n = a.n();
  if (static_cast<int>(map.size()) != n) throw std::invalid_argument("pullback: dimension mismatch");
  auto J = jacobian(map);
  // du^j as a 1-form on the x side.
  std::vector<DiffForm> du;
  for (int j = 0; j < n; ++j) {
    DiffForm d(n, 1);
    for (int i = 0; i < n; ++i) d.add({i + 1}, J[j][i]);
    du.push_back(std::move(d));
  }
  DiffForm r(n, a.degree());
  for (const auto& [I, f] : a.coeffs()) {
    DiffForm term(n, 0);
    term.add({}, f.compose(map));
    for (int idx : I) term = wedge(term, du[idx - 1]);
    r = r + term;
  }
  return r;
}

DiffForm pullback(const DiffForm& a, const Chart& chart) {
  return pullback(a, chart.forward);
}

MultiVector pushforward(const MultiVector& V, const Chart& chart) {
  if (chart.formal) throw std::invalid_argument("pushforward: chart has no polynomial inverse");
  const int n = V.n();
  if (chart.n != n) throw std::invalid_argument("pushforward: dimension mismatch");
  auto J = jacobian(chart.forward);
  // Image of the basis field d/dx^i, still in x coordinates.
  std::vector<MultiVector> Dx(n);
  for (int i = 0; i < n; ++i) {
    MultiVector d(n, 1);
    for (int h = 0; h < n; ++h) d.add({h + 1}, J[h][i]);
    Dx[i] = std::move(d);
  }
  MultiVector r(n, V.degree());
  for (const auto& [I, f] : V.coeffs()) {
    MultiVector term(n, 0);
    term.add({}, f);
    for (int idx : I) term = wedge(term, Dx[idx - 1]);
    r = r + term;
  }
  // Re-express the x-dependent coefficients through x = inverse(u).
  MultiVector out(n, V.degree());
  for (const auto& [I, f] : r.coeffs()) out.add(I, f.compose(chart.inverse));
  return out;
}

} // namespace ccdet
