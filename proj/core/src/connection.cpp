#include "ccdet/connection.hpp"

#include <sstream>
#include <stdexcept>

namespace ccdet {

size_t Connection::idx(int a, int b, int c) const {
  if (a < 1 || a > n_ || b < 1 || b > n_ || c < 1 || c > n_)
    throw std::out_of_range("Connection: index out of range");
  return (static_cast<size_t>(a - 1) * n_ + (b - 1)) * n_ + (c - 1);
}

namespace {

// Jacobian of the inverse map, composed with the forward map: a matrix of
// polynomials in the base coordinates with v * J(forward) == identity.
std::vector<std::vector<Poly>> inverse_jacobian_along(const Chart& chart) {
  if (chart.formal) throw std::invalid_argument("connection: chart has no polynomial inverse");
  const int n = chart.n;
  auto Jinv = jacobian(chart.inverse);
  std::vector<std::vector<Poly>> v(n, std::vector<Poly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v[i][j] = Jinv[i][j].compose(chart.forward);
  return v;
}

} // namespace

Connection christoffel_from_chart(const Chart& chart) {
  const int n = chart.n;
  auto v = inverse_jacobian_along(chart);
  Connection g(n);
  for (int b = 1; b <= n; ++b)
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        Poly s(n);
        for (int h = 1; h <= n; ++h)
          s += v[b - 1][h - 1] * chart.forward[h - 1].diff(i).diff(j);
        g.set_gamma(b, i, j, s);
        g.set_gamma(b, j, i, s);
      }
  return g;
}

Connection christoffel_from_chart_alt(const Chart& chart) {
  const int n = chart.n;
  auto v = inverse_jacobian_along(chart);
  auto J = jacobian(chart.forward);
  Connection g(n);
  for (int a = 1; a <= n; ++a)
    for (int c = 1; c <= n; ++c)
      for (int d = 1; d <= n; ++d) {
        Poly s(n);
        for (int b = 1; b <= n; ++b)
          s += v[a - 1][b - 1].diff(d) * J[b - 1][c - 1];
        g.set_gamma(a, c, d, -s);
      }
  return g;
}

Poly torsion(const Connection& g, int a, int b, int c) {
  return g.gamma(a, b, c) - g.gamma(a, c, b);
}

bool is_symmetric(const Connection& g) {
  for (int a = 1; a <= g.n(); ++a)
    for (int b = 1; b <= g.n(); ++b)
      for (int c = b + 1; c <= g.n(); ++c)
        if (!torsion(g, a, b, c).is_zero()) return false;
  return true;
}

Poly curvature(const Connection& g, int a, int b, int c, int d) {
  Poly r = g.gamma(a, b, d).diff(c) - g.gamma(a, b, c).diff(d);
  for (int e = 1; e <= g.n(); ++e)
    r += g.gamma(e, b, d) * g.gamma(a, c, e) - g.gamma(e, b, c) * g.gamma(a, d, e);
  return r;
}

bool is_flat(const Connection& g) {
  for (int a = 1; a <= g.n(); ++a)
    for (int b = 1; b <= g.n(); ++b)
      for (int c = 1; c <= g.n(); ++c)
        for (int d = c + 1; d <= g.n(); ++d)
          if (!curvature(g, a, b, c, d).is_zero()) return false;
  return true;
}

DiffForm covariant_derivative(const Connection& g, int j, const DiffForm& a) {
  const int n = a.n();
  DiffForm r(n, a.degree());
  for (const auto& [I, f] : a.coeffs()) {
    r.add(I, f.diff(j));
    for (size_t s = 0; s < I.size(); ++s)
      for (int h = 1; h <= n; ++h) {
        const Poly& gm = g.gamma(I[s], j, h);
        if (gm.is_zero()) continue;
        std::vector<int> tuple = I;
        tuple[s] = h;
        r.add_tuple(tuple, -(f * gm));
      }
  }
  return r;
}

MultiVector covariant_derivative(const Connection& g, int j, const MultiVector& V) {
  const int n = V.n();
  MultiVector r(n, V.degree());
  for (const auto& [I, f] : V.coeffs()) {
    r.add(I, f.diff(j));
    for (size_t s = 0; s < I.size(); ++s)
      for (int i = 1; i <= n; ++i) {
        const Poly& gm = g.gamma(i, j, I[s]);
        if (gm.is_zero()) continue;
        std::vector<int> tuple = I;
        tuple[s] = i;
        r.add_tuple(tuple, f * gm);
      }
  }
  return r;
}

std::string connection_str(const Connection& g) {
  std::ostringstream os;
  for (int a = 1; a <= g.n(); ++a)
    for (int b = 1; b <= g.n(); ++b)
      for (int c = 1; c <= g.n(); ++c) {
        const Poly& p = g.gamma(a, b, c);
        if (p.is_zero()) continue;
        os << "Gamma[" << a << "][" << b << "][" << c << "] = " << p.str() << "\n";
      }
  return os.str();
}

} // namespace ccdet
