#include "ccdet/gamma_system.hpp"

#include <stdexcept>

namespace ccdet {

GammaKey make_gamma_key(int a, int b, int c) {
  if (b > c) std::swap(b, c);
  return {a, b, c};
}

Poly eval_gamma_linear(const GammaLinear& e, const Connection& g) {
  Poly r(g.n());
  for (const auto& [k, coeff] : e) r += coeff * g.gamma(k.a, k.b, k.c);
  return r;
}

namespace {

void add_to(GammaLinear& e, const GammaKey& k, const Poly& c) {
  if (c.is_zero()) return;
  auto it = e.find(k);
  if (it == e.end()) {
    e.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

// Signed coefficient of the antisymmetric extension at an arbitrary tuple.
template <Variance V>
Poly extended_coeff(const Exterior<V>& a, const std::vector<int>& tuple) {
  auto sorted = sort_index_tuple(tuple);
  if (!sorted) return Poly(a.n());
  const Poly& f = a.coeff(sorted->index);
  return sorted->sign > 0 ? f : -f;
}

template <Variance V>
std::map<RowKey, GammaLinear> assemble_phi_impl(const Exterior<V>& a) {
  const int n = a.n();
  const int p = a.degree();
  std::map<RowKey, GammaLinear> phi;
  for (int j = 1; j <= n; ++j)
    for (const auto& J : all_multi_indices(n, p)) {
      GammaLinear e;
      for (int s = 0; s < p; ++s)
        for (int h = 1; h <= n; ++h) {
          std::vector<int> tuple = J;
          tuple[s] = h;
          Poly f = extended_coeff(a, tuple);
          if (f.is_zero()) continue;
          const GammaKey key = V == Variance::Covariant
                                   ? make_gamma_key(h, j, J[s])
                                   : make_gamma_key(J[s], j, h);
          add_to(e, key, f);
        }
      phi.emplace(RowKey{j, J}, std::move(e));
    }
  return phi;
}

template <Variance V>
GammaSystem assemble_system_impl(const Exterior<V>& a) {
  const int n = a.n();
  const int p = a.degree();
  if (p < 1 || p > n) throw std::invalid_argument("assemble_system: degree out of range");
  GammaSystem sys;
  sys.n = n;
  sys.degree = p;
  sys.variance = V;
  for (int x = 1; x <= n; ++x)
    for (int b = 1; b <= n; ++b)
      for (int c = b; c <= n; ++c) sys.unknowns.push_back({x, b, c});
  auto phi = assemble_phi_impl(a);
  for (auto& [key, e] : phi) {
    sys.row_keys.push_back(key);
    Poly d = a.coeff(key.second).diff(key.first);
    if (V == Variance::Contravariant) d = -d;
    sys.rhs.push_back(std::move(d));
    sys.rows.push_back(std::move(e));
  }
  return sys;
}

} // namespace

std::map<RowKey, GammaLinear> assemble_phi(const DiffForm& a) { return assemble_phi_impl(a); }
std::map<RowKey, GammaLinear> assemble_phi(const MultiVector& V) { return assemble_phi_impl(V); }

GammaSystem assemble_system(const DiffForm& a) { return assemble_system_impl(a); }
GammaSystem assemble_system(const MultiVector& V) { return assemble_system_impl(V); }

QMatrix GammaSystem::matrix_at(const QVector& point) const {
  std::map<GammaKey, int> col;
  for (size_t i = 0; i < unknowns.size(); ++i) col[unknowns[i]] = static_cast<int>(i);
  QMatrix m(rows.size(), QVector(unknowns.size(), 0));
  for (size_t r = 0; r < rows.size(); ++r)
    for (const auto& [k, c] : rows[r]) m[r][col.at(k)] = c.eval(point);
  return m;
}

QVector GammaSystem::rhs_at(const QVector& point) const {
  QVector v;
  v.reserve(rhs.size());
  for (const auto& p : rhs) v.push_back(p.eval(point));
  return v;
}

std::vector<RankReport> rank_analysis(const GammaSystem& sys, const std::vector<QVector>& points) {
  if (points.empty()) throw std::invalid_argument("rank_analysis: empty point list");
  std::vector<RankReport> out;
  for (const auto& pt : points) {
    QMatrix m = sys.matrix_at(pt);
    QVector b = sys.rhs_at(pt);
    RankReport rep;
    rep.point = pt;
    rep.rank_M = rank(m);
    for (size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
    rep.rank_M_aug = rank(std::move(m));
    rep.consistent = rep.rank_M == rep.rank_M_aug;
    out.push_back(std::move(rep));
  }
  return out;
}

} // namespace ccdet
