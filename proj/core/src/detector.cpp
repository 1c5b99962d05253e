#include "ccdet/detector.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ccdet {

namespace {

QVector resolve_base(const DetectConfig& cfg, int n) {
  if (cfg.base.empty()) return QVector(n, 0);
  if (static_cast<int>(cfg.base.size()) != n)
    throw std::invalid_argument("detect: base point dimension mismatch");
  return cfg.base;
}

template <Variance V>
bool vanishes_at(const Exterior<V>& a, const QVector& point) {
  auto vals = eval_coeffs(a, point);
  return std::all_of(vals.begin(), vals.end(), [](const Rational& r) { return r == 0; });
}

std::string point_str(const QVector& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += p[i].str();
  }
  return s + ")";
}

// Rank of the skew coefficient matrix of a degree-2 object at a point.
template <Variance V>
int degree2_rank(const Exterior<V>& a, const QVector& point) {
  const int n = a.n();
  QMatrix m(n, QVector(n, 0));
  for (const auto& [I, f] : a.coeffs()) {
    Rational v = f.eval(point);
    m[I[0] - 1][I[1] - 1] = v;
    m[I[1] - 1][I[0] - 1] = -v;
  }
  return rank(std::move(m));
}

template <Variance V>
void general_rank_path(DetectionReport& rep, const Exterior<V>& a, const DetectConfig& cfg,
                       const QVector& base) {
  GammaSystem sys = assemble_system(a);
  std::vector<QVector> pts{base};
  auto extra = sample_points(a.n(), cfg.samples, cfg.seed, cfg.bound);
  pts.insert(pts.end(), extra.begin(), extra.end());
  rep.rank_data = rank_analysis(sys, pts);
  for (const auto& rk : rep.rank_data)
    if (!rk.consistent) {
      rep.verdict = Verdict::NotConstant;
      rep.add_reason("Rem4.3-rank-inconsistency",
                     "connection system inconsistent at " + point_str(rk.point));
      return;
    }
  rep.verdict = Verdict::Inconclusive;
  rep.add_reason("Rem4.3-rank-consistent",
                 "connection system consistent at all sample points; flatness unverified");
}

std::string render_residual(const Object& obj) {
  return std::visit([](const auto& o) { return o.str(); }, obj);
}

template <Variance V>
void chart_witness_path(DetectionReport& rep, const Exterior<V>& a, const DetectConfig& cfg) {
  if (!cfg.chart || rep.verdict != Verdict::Inconclusive) return;
  auto vr = verify_chart(a, *cfg.chart);
  if (vr.constant) {
    rep.verdict = Verdict::Constant;
    rep.add_reason(V == Variance::Covariant ? "Def1.1-chart-witness" : "Def1.10-chart-witness",
                   "object has constant coefficients in the supplied chart");
    rep.chart = cfg.chart;
  } else {
    rep.add_reason("chart-rejected", "residual " + render_residual(vr.residual));
  }
}

} // namespace

std::vector<QVector> sample_points(int n, int count, unsigned seed, int bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  std::vector<QVector> pts;
  for (int k = 0; k < count; ++k) {
    QVector p;
    for (int i = 0; i < n; ++i) p.emplace_back(num(rng), den(rng));
    pts.push_back(std::move(p));
  }
  return pts;
}

DetectionReport detect(const DiffForm& a, const DetectConfig& cfg) {
  const int n = a.n();
  const int p = a.degree();
  if (p < 1 || p > n) throw std::invalid_argument("detect: degree out of range");
  const QVector base = resolve_base(cfg, n);
  DetectionReport rep;

  if (a.is_zero()) {
    rep.verdict = Verdict::Constant;
    rep.add_reason("Def1.1-zero", "zero object has constant coefficients");
    return rep;
  }
  // Closedness is checked before the point screen: it is the stronger,
  // point-independent obstruction.
  {
    DiffForm d = exterior_derivative(a);
    if (!d.is_zero()) {
      rep.verdict = Verdict::NotConstant;
      rep.add_reason("Prop1.3-closedness", "d(object) = " + d.str());
      return rep;
    }
  }
  if (vanishes_at(a, base)) {
    rep.verdict = Verdict::NotConstant;
    rep.add_reason("Def1.1-vanishing",
                   "object vanishes at base point " + point_str(base) + " but is not identically zero");
    return rep;
  }

  if (p == 1) {
    rep.verdict = Verdict::Constant;
    rep.add_reason("Ex1.5-closed-1form", "closed and nonvanishing at base point");
    rep.chart = chart_from_exact_1form(a, base);
    return rep;
  }

  if (p == n) {
    rep.verdict = Verdict::Constant;
    rep.add_reason("Ex1.6-volume", "top-degree form nonvanishing at base point");
    rep.chart = chart_from_volume_form(a, base);
    return rep;
  }

  if (p == n - 1) {
    rep.verdict = Verdict::Constant;
    rep.add_reason("Ex1.8-closed-codegree1", "closed (n-1)-form nonvanishing at base point");
    if (a.coeffs().size() == 1) {
      // Coordinate-aligned case F dx^I: integrate F along the first index.
      const auto& [I, F] = *a.coeffs().begin();
      Chart chart;
      chart.n = n;
      for (int i = 1; i <= n; ++i) chart.forward.push_back(Poly::variable(n, i));
      const int j1 = I[0];
      chart.forward[j1 - 1] = F.integrate(j1);
      if (F.is_constant()) {
        chart.inverse = chart.forward;
        chart.inverse[j1 - 1] = Poly::variable(n, j1) * (Rational(1) / F.constant_value());
      } else {
        chart.formal = true;
      }
      rep.chart = std::move(chart);
    }
    return rep;
  }

  if (p == 2) {
    std::vector<QVector> pts{base};
    auto extra = sample_points(n, cfg.samples, cfg.seed, cfg.bound);
    pts.insert(pts.end(), extra.begin(), extra.end());
    const int r0 = degree2_rank(a, pts[0]);
    for (size_t k = 1; k < pts.size(); ++k) {
      const int rk = degree2_rank(a, pts[k]);
      if (rk != r0) {
        rep.verdict = Verdict::NotConstant;
        rep.add_reason("Ex1.7-rank-jump", "coefficient rank " + std::to_string(r0) + " at " +
                                              point_str(pts[0]) + " vs " + std::to_string(rk) +
                                              " at " + point_str(pts[k]));
        return rep;
      }
    }
    rep.verdict = Verdict::Constant;
    rep.add_reason("Ex1.7-darboux", "closed 2-form with constant coefficient rank " +
                                        std::to_string(r0) + " at all sample points");
    return rep;
  }

  general_rank_path(rep, a, cfg, base);
  chart_witness_path(rep, a, cfg);
  return rep;
}

DetectionReport detect(const MultiVector& V, const DetectConfig& cfg) {
  const int n = V.n();
  const int q = V.degree();
  if (q < 1 || q > n) throw std::invalid_argument("detect: degree out of range");
  const QVector base = resolve_base(cfg, n);
  DetectionReport rep;

  if (V.is_zero()) {
    rep.verdict = Verdict::Constant;
    rep.add_reason("Def1.10-zero", "zero object has constant coefficients");
    return rep;
  }
  if (vanishes_at(V, base)) {
    rep.verdict = Verdict::NotConstant;
    rep.add_reason("Def1.10-vanishing",
                   "object vanishes at base point " + point_str(base) + " but is not identically zero");
    return rep;
  }

  if (q == 1) {
    rep.verdict = Verdict::Constant;
    rep.add_reason("Ex1.13-nonvanishing-vector", "nonvanishing vector field is straightenable");
    return rep;
  }
  if (q == n) {
    rep.verdict = Verdict::Constant;
    rep.add_reason("Ex1.19-top-multivector", "top-degree multivector nonvanishing at base point");
    return rep;
  }
  if (q == 2 && n % 2 == 0) {
    MultiVector br = schouten_bracket(V, V);
    if (!br.is_zero()) {
      rep.verdict = Verdict::NotConstant;
      rep.add_reason("Prop1.11-self-bracket", "[V,V] = " + br.str());
      return rep;
    }
    if (degree2_rank(V, base) == n) {
      rep.verdict = Verdict::Constant;
      rep.add_reason("Cor1.12-symplectic", "rank-n 2-vector with vanishing self-bracket, n even");
      return rep;
    }
  }
  if (q == n - 1) {
    DetectionReport sub = detect_vec_n_minus_1(V, cfg);
    if (sub.verdict != Verdict::Inconclusive) return sub;
    rep.reasons = sub.reasons;
  }
  if (2 * q - 1 > n)
    rep.add_reason("Rem1.18-auto-vanish", "self-bracket vanishes identically for 2q-1 > n; no information");
  MultiVector br = schouten_bracket(V, V);
  if (!br.is_zero()) {
    rep.verdict = Verdict::NotConstant;
    rep.add_reason("Prop1.11-self-bracket", "[V,V] = " + br.str());
    return rep;
  }
  general_rank_path(rep, V, cfg, base);
  chart_witness_path(rep, V, cfg);
  return rep;
}

DetectionReport detect_conformal(const DiffForm& a, const DetectConfig& cfg) {
  if (a.is_zero()) throw std::invalid_argument("detect_conformal: zero input");
  const int n = a.n();
  const int p = a.degree();
  const QVector base = resolve_base(cfg, n);
  DetectionReport rep;

  if (p == 1 || p == 2) {
    DiffForm w = wedge(a, exterior_derivative(a));
    if (!w.is_zero()) {
      rep.verdict = Verdict::NotConstant;
      rep.add_reason("Ex1.20-frobenius", "w ^ dw = " + w.str());
      return rep;
    }
    if (!vanishes_at(a, base)) {
      rep.verdict = Verdict::ConformalConstant;
      rep.add_reason("Ex1.20-frobenius", "w ^ dw = 0 and w nonvanishing at base point");
      return rep;
    }
  }

  std::vector<Poly> cs;
  for (const auto& [I, f] : a.coeffs()) cs.push_back(f);
  Poly content = poly_gcd(cs);
  DiffForm prim(n, p);
  for (const auto& [I, f] : a.coeffs()) prim.add(I, *exact_divide(f, content));
  DetectionReport sub = detect(prim, cfg);
  rep.rank_data = sub.rank_data;
  if (sub.verdict == Verdict::Constant) {
    rep.verdict = Verdict::ConformalConstant;
    rep.add_reason("Def1.17-content", "content factor " + content.str() + " times a constant-coefficient part");
    rep.reasons.insert(rep.reasons.end(), sub.reasons.begin(), sub.reasons.end());
    rep.chart = sub.chart;
    return rep;
  }
  rep.verdict = Verdict::Inconclusive;
  rep.add_reason("Def1.17-content", "primitive part (content " + content.str() + ") not decided constant");
  rep.reasons.insert(rep.reasons.end(), sub.reasons.begin(), sub.reasons.end());
  return rep;
}

DetectionReport detect_conformal(const MultiVector& V, const DetectConfig& cfg) {
  if (V.is_zero()) throw std::invalid_argument("detect_conformal: zero input");
  const int n = V.n();
  const int q = V.degree();
  const QVector base = resolve_base(cfg, n);
  DetectionReport rep;

  if (q == n - 1) {
    DiffForm vol = DiffForm::basis(n, all_multi_indices(n, n)[0]);
    DiffForm alpha = iota_pq(V, vol);
    DiffForm w = wedge(alpha, exterior_derivative(alpha));
    if (!w.is_zero()) {
      rep.verdict = Verdict::NotConstant;
      rep.add_reason("Ex1.21-frobenius", "a ^ da = " + w.str() + " for the dual 1-form a");
      return rep;
    }
    if (!vanishes_at(alpha, base)) {
      rep.verdict = Verdict::ConformalConstant;
      rep.add_reason("Ex1.21-frobenius", "dual 1-form satisfies a ^ da = 0 and is nonvanishing at base point");
      return rep;
    }
  }

  std::vector<Poly> cs;
  for (const auto& [I, f] : V.coeffs()) cs.push_back(f);
  Poly content = poly_gcd(cs);
  MultiVector prim(n, q);
  for (const auto& [I, f] : V.coeffs()) prim.add(I, *exact_divide(f, content));
  DetectionReport sub = detect(prim, cfg);
  rep.rank_data = sub.rank_data;
  if (sub.verdict == Verdict::Constant) {
    rep.verdict = Verdict::ConformalConstant;
    rep.add_reason("Def1.17-content", "content factor " + content.str() + " times a constant-coefficient part");
    rep.reasons.insert(rep.reasons.end(), sub.reasons.begin(), sub.reasons.end());
    rep.chart = sub.chart;
    return rep;
  }
  rep.verdict = Verdict::Inconclusive;
  rep.add_reason("Def1.17-content", "primitive part (content " + content.str() + ") not decided constant");
  rep.reasons.insert(rep.reasons.end(), sub.reasons.begin(), sub.reasons.end());
  return rep;
}

DetectionReport detect_vec_n_minus_1(const MultiVector& V, const DetectConfig& cfg,
                                     const std::optional<Connection>& derivation) {
  const int n = V.n();
  if (V.degree() != n - 1) throw std::invalid_argument("detect_vec_n_minus_1: degree mismatch");
  const QVector base = resolve_base(cfg, n);
  if (vanishes_at(V, base)) throw std::invalid_argument("detect_vec_n_minus_1: vanishes at base point");
  DetectionReport rep;

  if (derivation) {
    bool flat_sym = is_symmetric(*derivation) && is_flat(*derivation);
    bool parallel = true;
    for (int j = 1; j <= n && parallel; ++j)
      parallel = covariant_derivative(*derivation, j, V).is_zero();
    if (flat_sym && parallel) {
      rep.verdict = Verdict::Constant;
      rep.add_reason("Prop1.13-derivation", "object parallel for a supplied flat torsion-free connection");
      return rep;
    }
    rep.add_reason("derivation-rejected", flat_sym ? "object not parallel" : "connection not flat torsion-free");
  }

  if (V.coeffs().size() == 1) {
    const auto& [I, F] = *V.coeffs().begin();
    const int k = complement(I, n)[0];
    if (F.is_constant()) {
      rep.verdict = Verdict::Constant;
      rep.add_reason("Def1.10-constant", "coefficients already constant");
      return rep;
    }
    bool only_k = true;
    for (int v = 1; v <= n && only_k; ++v)
      if (v != k && F.depends_on(v)) only_k = false;
    if (only_k) {
      rep.verdict = Verdict::Constant;
      rep.add_reason("Prop1.13-chart", "coefficient depends only on x" + std::to_string(k) +
                                           "; rectifying chart y" + std::to_string(I[0]) + " = x" +
                                           std::to_string(I[0]) + "/(" + F.str() + ")");
      return rep;
    }
    // d^nabla obstruction along the normalized path.
    DiffForm dF(n, 1);
    for (int v = 1; v <= n; ++v) dF.add({v}, F.diff(v));
    DiffForm obst = wedge(dF, DiffForm::basis(n, {k}));
    rep.verdict = Verdict::Inconclusive;
    rep.add_reason("Prop1.13-obstruction", "dF ^ dx" + std::to_string(k) + " = " + obst.str());
    return rep;
  }

  auto ker = kernel_system(V, base);
  rep.verdict = Verdict::Inconclusive;
  rep.add_reason("Prop1.11-kernel", "contraction kernel at base point has dimension " +
                                        std::to_string(ker.size()) + "; not coordinate-aligned");
  return rep;
}

std::vector<QVector> kernel_system(const MultiVector& V, const QVector& point) {
  const int n = V.n();
  QMatrix m;
  std::vector<QVector> cols;
  for (int i = 1; i <= n; ++i)
    cols.push_back(eval_coeffs(interior_form_vec(DiffForm::basis(n, {i}), V), point));
  const size_t rows = cols[0].size();
  m.assign(rows, QVector(n, 0));
  for (size_t r = 0; r < rows; ++r)
    for (int i = 0; i < n; ++i) m[r][i] = cols[i][r];
  return nullspace(m);
}

std::vector<QVector> kernel_system(const DiffForm& a, const QVector& point) {
  const int n = a.n();
  std::vector<QVector> cols;
  for (int i = 1; i <= n; ++i)
    cols.push_back(eval_coeffs(interior_vec_form(MultiVector::basis(n, {i}), a), point));
  const size_t rows = cols[0].size();
  QMatrix m(rows, QVector(n, 0));
  for (size_t r = 0; r < rows; ++r)
    for (int i = 0; i < n; ++i) m[r][i] = cols[i][r];
  return nullspace(m);
}

Nm1System nminus1_vector_system(const MultiVector& V) {
  const int n = V.n();
  if (V.degree() != n - 1) throw std::invalid_argument("nminus1_vector_system: degree mismatch");
  Nm1System out;
  GammaSystem& sys = out.sys;
  sys.n = n;
  sys.degree = n - 1;
  sys.variance = Variance::Contravariant;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = b; c <= n; ++c) sys.unknowns.push_back({a, b, c});
  auto F = [&](int l) { return V.coeff(complement({l}, n)); };
  auto accumulate = [](GammaLinear& row, const GammaKey& key, const Poly& c) {
    if (c.is_zero()) return;
    auto it = row.find(key);
    if (it == row.end())
      row.emplace(key, c);
    else
      it->second += c;
  };
  for (int j = 1; j <= n; ++j)
    for (int l = 1; l <= n; ++l) {
      GammaLinear row, raw;
      const Poly Fl = F(l);
      for (int h = 1; h <= n; ++h) {
        if (h == l) continue;
        accumulate(row, make_gamma_key(h, j, h), Fl);
        accumulate(raw, GammaKey{h, j, h}, Fl);
      }
      for (int i = 1; i <= n; ++i) {
        if (i == l) continue;
        const int sgn = (i - l) % 2 == 0 ? 1 : -1;
        Poly c = F(i) * Rational(-sgn);
        accumulate(row, make_gamma_key(i, j, l), c);
        accumulate(raw, GammaKey{i, j, l}, c);
      }
      for (auto it = row.begin(); it != row.end();)
        it = it->second.is_zero() ? row.erase(it) : std::next(it);
      sys.row_keys.push_back({j, MultiIndex{l}});
      sys.rows.push_back(std::move(row));
      out.raw_rows.push_back(std::move(raw));
      sys.rhs.push_back(-F(l).diff(j));
    }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) out.raw_unknowns.push_back({a, b, c});
  out.notes.push_back("system E[j,l]: " + std::to_string(sys.rows.size()) + " equations, " +
                      std::to_string(sys.unknowns.size()) + " unknowns");
  if (n == 3) {
    MultiVector br = schouten_bracket(V, V);
    out.C = br.coeff({1, 2, 3}) * Rational(-1, 2);
    const Poly F2 = F(2);
    // Denominator-cleared constraint numerators; the third involves free
    // Gamma unknowns and is recorded without assertion.
    out.constraints.push_back(F2 * out.C.diff(3) - out.C * F2.diff(3));
    out.constraints.push_back(F2 * out.C.diff(2) - out.C * F2.diff(2));
    out.constraints.push_back(out.C);
    out.notes.push_back("n=3 constraints C1, C2 recorded as denominator-cleared numerators; "
                        "C3 involves free unknowns and is recorded only");
  }
  return out;
}

QMatrix Nm1System::raw_matrix_at(const QVector& point) const {
  QMatrix m(raw_rows.size(), QVector(raw_unknowns.size(), 0));
  std::map<GammaKey, size_t> col;
  for (size_t c = 0; c < raw_unknowns.size(); ++c) col.emplace(raw_unknowns[c], c);
  for (size_t r = 0; r < raw_rows.size(); ++r)
    for (const auto& [k, p] : raw_rows[r]) m[r][col.at(k)] = p.eval(point);
  return m;
}

namespace {

// Non-constant part of every coefficient.
template <Variance Vr>
Exterior<Vr> nonconstant_part(const Exterior<Vr>& a) {
  const int n = a.n();
  Exterior<Vr> r(n, a.degree());
  for (const auto& [I, f] : a.coeffs()) {
    Poly g = f - Poly::constant(n, f.eval(QVector(n, 0)));
    if (!g.is_zero()) r.add(I, g);
  }
  return r;
}

} // namespace

VerifyResult verify_chart(const DiffForm& a, const Chart& chart) {
  if (chart.n != a.n()) throw std::invalid_argument("verify_chart: dimension mismatch");
  if (!chart.validate()) throw std::invalid_argument("verify_chart: chart round-trip violation");
  const int n = a.n();
  const int p = a.degree();
  if (!chart.formal) {
    DiffForm expressed = pullback(a, chart.inverse);
    DiffForm res = nonconstant_part(expressed);
    return {res.is_zero(), Object(res)};
  }
  // Only the forward map is available: solve for constant lambda with
  // a == sum_I lambda_I d(u^I), matching monomial by monomial.
  auto idxs = all_multi_indices(n, p);
  std::vector<DiffForm> pulled;
  for (const auto& I : idxs) pulled.push_back(pullback(DiffForm::basis(n, I), chart.forward));
  // Rows: one per (coefficient index J, exponent vector).
  std::map<std::pair<MultiIndex, Exponents>, size_t> rowid;
  auto row_of = [&](const MultiIndex& J, const Exponents& e) {
    return rowid.emplace(std::make_pair(J, e), rowid.size()).first->second;
  };
  std::vector<std::map<size_t, Rational>> sparse_cols(idxs.size());
  for (size_t c = 0; c < idxs.size(); ++c)
    for (const auto& [J, f] : pulled[c].coeffs())
      for (const auto& [e, v] : f.terms()) sparse_cols[c][row_of(J, e)] = v;
  std::map<size_t, Rational> sparse_rhs;
  for (const auto& [J, f] : a.coeffs())
    for (const auto& [e, v] : f.terms()) sparse_rhs[row_of(J, e)] = v;
  QMatrix m(rowid.size(), QVector(idxs.size(), 0));
  QVector b(rowid.size(), 0);
  for (size_t c = 0; c < idxs.size(); ++c)
    for (const auto& [r, v] : sparse_cols[c]) m[r][c] = v;
  for (const auto& [r, v] : sparse_rhs) b[r] = v;
  auto sol = solve(m, b);
  if (sol) return {true, Object(DiffForm(n, p))};
  return {false, Object(a)};
}

VerifyResult verify_chart(const MultiVector& V, const Chart& chart) {
  if (chart.n != V.n()) throw std::invalid_argument("verify_chart: dimension mismatch");
  if (!chart.validate()) throw std::invalid_argument("verify_chart: chart round-trip violation");
  const int n = V.n();
  if (!chart.formal) {
    MultiVector expressed = pushforward(V, chart);
    MultiVector res = nonconstant_part(expressed);
    return {res.is_zero(), Object(res)};
  }
  // The target coefficients are constant iff the Jacobian-transformed
  // object is constant already in the base coordinates, so the inverse is
  // not needed.
  auto J = jacobian(chart.forward);
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
  MultiVector res = nonconstant_part(r);
  return {res.is_zero(), Object(res)};
}

Chart chart_from_volume_form(const DiffForm& a, const QVector& base) {
  const int n = a.n();
  if (a.degree() != n) throw std::invalid_argument("chart_from_volume_form: not a top form");
  MultiIndex top = all_multi_indices(n, n)[0];
  const Poly f = a.coeff(top);
  if (f.eval(base) == 0) throw std::invalid_argument("chart_from_volume_form: coefficient vanishes at base");
  Chart chart;
  chart.n = n;
  for (int i = 1; i <= n; ++i) chart.forward.push_back(Poly::variable(n, i));
  chart.forward[0] = f.integrate(1);
  if (f.is_constant()) {
    chart.inverse = chart.forward;
    chart.inverse[0] = Poly::variable(n, 1) * (Rational(1) / f.constant_value());
  } else {
    chart.formal = true;
  }
  return chart;
}

Chart chart_from_exact_1form(const DiffForm& a, const QVector& base) {
  const int n = a.n();
  if (a.degree() != 1) throw std::invalid_argument("chart_from_exact_1form: not a 1-form");
  if (!exterior_derivative(a).is_zero()) throw std::invalid_argument("chart_from_exact_1form: not closed");
  auto vals = eval_coeffs(a, base);
  int k = 0;
  for (int i = 1; i <= n; ++i)
    if (vals[i - 1] != 0) {
      k = i;
      break;
    }
  if (k == 0) throw std::invalid_argument("chart_from_exact_1form: vanishes at base");
  // Potential by line integration along the coordinate axes.
  Poly f(n);
  for (int i = 1; i <= n; ++i) {
    Poly ai = a.coeff({i});
    for (int j = i + 1; j <= n; ++j) ai = ai.substitute_var(j, Poly(n));
    f += ai.integrate(i);
  }
  for (int i = 1; i <= n; ++i)
    if (f.diff(i) != a.coeff({i})) throw std::invalid_argument("chart_from_exact_1form: potential check failed");
  // Chart with u1 = f; coordinate x^k moves to slot k's place via u^k = x^1.
  Chart chart;
  chart.n = n;
  for (int i = 1; i <= n; ++i) chart.forward.push_back(Poly::variable(n, i));
  chart.forward[0] = f;
  if (k != 1) chart.forward[k - 1] = Poly::variable(n, 1);
  const Poly dfk = f.diff(k);
  if (dfk.is_constant() && !dfk.is_zero()) {
    // f = c x^k + g(others): polynomial inverse exists.
    const Rational c = dfk.constant_value();
    Poly g = f - Poly::variable(n, k) * c; // independent of x^k
    // Express g through u-coordinates: x^1 sits in u^k when permuted.
    std::vector<Poly> subst;
    for (int i = 1; i <= n; ++i) subst.push_back(Poly::variable(n, i));
    if (k != 1) subst[0] = Poly::variable(n, k);
    Poly xk = (Poly::variable(n, 1) - g.compose(subst)) * (Rational(1) / c);
    chart.inverse.clear();
    for (int i = 1; i <= n; ++i) chart.inverse.push_back(Poly::variable(n, i));
    if (k != 1) chart.inverse[0] = Poly::variable(n, k);
    chart.inverse[k - 1] = xk;
  } else {
    chart.formal = true;
  }
  return chart;
}

} // namespace ccdet
