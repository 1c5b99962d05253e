#include "ccdet/detector.hpp"
#include "ccdet/oracle.hpp"
#include "ccdet/parse.hpp"

#include <doctest.h>

using namespace ccdet;

namespace {

bool has_rule(const DetectionReport& r, const std::string& rule) {
  for (const auto& reason : r.reasons)
    if (reason.rule == rule) return true;
  return false;
}

DiffForm form(const std::string& text, int n) { return std::get<DiffForm>(parse_object(text, n)); }
MultiVector vec(const std::string& text, int n) { return std::get<MultiVector>(parse_object(text, n)); }

} // namespace

TEST_CASE("screening verdicts") {
  DetectionReport z = detect(DiffForm(2, 1));
  CHECK(z.verdict == Verdict::Constant);
  CHECK(has_rule(z, "Def1.1-zero"));

  DetectionReport v = detect(form("x1*dx[1]", 2));
  CHECK(v.verdict == Verdict::NotConstant);
  CHECK(has_rule(v, "Def1.1-vanishing"));

  DetectionReport zv = detect(MultiVector(3, 2));
  CHECK(zv.verdict == Verdict::Constant);
  CHECK(has_rule(zv, "Def1.10-zero"));
}

TEST_CASE("1-forms") {
  DetectConfig cfg;
  cfg.base = {0, 1};
  DetectionReport ok = detect(form("x2*dx[2]", 2), cfg);
  CHECK(ok.verdict == Verdict::Constant);
  CHECK(has_rule(ok, "Ex1.5-closed-1form"));
  REQUIRE(ok.chart.has_value());
  CHECK(ok.chart->formal);
  CHECK(verify_chart(form("x2*dx[2]", 2), *ok.chart).constant);

  DetectionReport bad = detect(form("x2*dx[1]", 2), cfg);
  CHECK(bad.verdict == Verdict::NotConstant);
  CHECK(has_rule(bad, "Prop1.3-closedness"));
}

TEST_CASE("top and codegree-1 forms") {
  DetectionReport vol = detect(form("(1 + x1^2)*dx[1,2]", 2));
  CHECK(vol.verdict == Verdict::Constant);
  CHECK(has_rule(vol, "Ex1.6-volume"));
  REQUIRE(vol.chart.has_value());
  CHECK(verify_chart(form("(1 + x1^2)*dx[1,2]", 2), *vol.chart).constant);

  DiffForm a = form("dx[1,2] - 2*x3*dx[2,3]", 3);
  DetectionReport cod = detect(a);
  CHECK(cod.verdict == Verdict::Constant);
  CHECK(has_rule(cod, "Ex1.8-closed-codegree1"));
  CHECK(!cod.chart.has_value());

  DetectionReport aligned = detect(form("(1 + x1)*dx[1,2]", 3));
  CHECK(aligned.verdict == Verdict::Constant);
  REQUIRE(aligned.chart.has_value());
  CHECK(verify_chart(form("(1 + x1)*dx[1,2]", 3), *aligned.chart).constant);

  DetectionReport notc = detect(form("x1*dx[2,3]", 3), {{1, 1, 1}});
  CHECK(notc.verdict == Verdict::NotConstant);
  CHECK(has_rule(notc, "Prop1.3-closedness"));
}

TEST_CASE("closed 2-forms by rank") {
  DetectionReport darboux = detect(form("dx[1,2] + dx[3,4]", 4));
  CHECK(darboux.verdict == Verdict::Constant);
  CHECK(has_rule(darboux, "Ex1.7-darboux"));

  DetectionReport jump = detect(form("dx[1,2] + x3*dx[3,4]", 4));
  CHECK(jump.verdict == Verdict::NotConstant);
  CHECK(has_rule(jump, "Ex1.7-rank-jump"));
}

TEST_CASE("vector field shortcuts") {
  DetectionReport v1 = detect(vec("(1 + x1^2)*Dx[1]", 3));
  CHECK(v1.verdict == Verdict::Constant);
  CHECK(has_rule(v1, "Ex1.13-nonvanishing-vector"));

  DetectionReport top = detect(vec("(1 + x2)*Dx[1,2]", 2));
  CHECK(top.verdict == Verdict::Constant);
  CHECK(has_rule(top, "Ex1.19-top-multivector"));

  DetectionReport sympl = detect(vec("Dx[1,2] + Dx[3,4]", 4));
  CHECK(sympl.verdict == Verdict::Constant);
  CHECK(has_rule(sympl, "Cor1.12-symplectic"));

  DetectionReport br = detect(vec("Dx[1,2] + x2*Dx[3,4]", 4));
  CHECK(br.verdict == Verdict::NotConstant);
  CHECK(has_rule(br, "Prop1.11-self-bracket"));
}

TEST_CASE("codegree-1 multivectors") {
  DetectionReport cst = detect_vec_n_minus_1(vec("2*Dx[1,2]", 3));
  CHECK(cst.verdict == Verdict::Constant);
  CHECK(has_rule(cst, "Def1.10-constant"));

  DetectionReport rect = detect_vec_n_minus_1(vec("(1 + x3)*Dx[1,2]", 3));
  CHECK(rect.verdict == Verdict::Constant);
  CHECK(has_rule(rect, "Prop1.13-chart"));

  DetectConfig off;
  off.base = {1, 1, 1};
  DetectionReport obst = detect_vec_n_minus_1(vec("x1*Dx[1,2]", 3), off);
  CHECK(obst.verdict == Verdict::Inconclusive);
  CHECK(has_rule(obst, "Prop1.13-obstruction"));

  DetectionReport multi = detect_vec_n_minus_1(vec("(1 + x1)*Dx[1,2] + Dx[1,3]", 3));
  CHECK(multi.verdict == Verdict::Inconclusive);
  CHECK(has_rule(multi, "Prop1.11-kernel"));

  CHECK_THROWS(detect_vec_n_minus_1(vec("x1*Dx[1,2]", 3)));

  Connection zero(3);
  DetectionReport para = detect_vec_n_minus_1(vec("2*Dx[1,2]", 3), {}, zero);
  CHECK(para.verdict == Verdict::Constant);
  CHECK(has_rule(para, "Prop1.13-derivation"));

  // detect() routes through the same machinery.
  DetectionReport routed = detect(vec("(1 + x3)*Dx[1,2]", 3));
  CHECK(routed.verdict == Verdict::Constant);
  CHECK(has_rule(routed, "Prop1.13-chart"));
}

TEST_CASE("general rank path and chart witness") {
  // Non-constant but consistent at samples: inconclusive without a chart,
  // constant with the witnessing chart supplied.
  auto corpus = positive_corpus(6, 3, Variance::Covariant, 1, 99);
  const DiffForm& a = std::get<DiffForm>(corpus[0].obj);
  DetectionReport plain = detect(a);
  if (plain.verdict == Verdict::Inconclusive) {
    CHECK(has_rule(plain, "Rem4.3-rank-consistent"));
    DetectConfig cfg;
    cfg.chart = corpus[0].chart;
    DetectionReport witnessed = detect(a, cfg);
    CHECK(witnessed.verdict == Verdict::Constant);
    CHECK(has_rule(witnessed, "Def1.1-chart-witness"));
    CHECK(witnessed.chart.has_value());
  }

  DetectionReport inc = detect(form("x2*dx[1] + x1*dx[2] + dx[3]", 3));
  CHECK(inc.verdict != Verdict::NotConstant); // closed, consistent

  // Rejected chart leaves the verdict untouched and records the residual.
  DetectConfig bad;
  bad.chart = Chart::identity(6);
  DetectionReport rej = detect(a, bad);
  if (rej.verdict == Verdict::Inconclusive) CHECK(has_rule(rej, "chart-rejected"));
}

TEST_CASE("rank inconsistency certifies non-constancy") {
  // Closed 3-form on R^6 with an inconsistent connection system.
  DiffForm a = form("dx[1,2,3] + x1^2*dx[4,5,6]", 6);
  CHECK(exterior_derivative(a).is_zero() == false);
  DiffForm b = form("dx[1,2,3] + x4*dx[1,2,4] + x4^2*dx[4,5,6]", 6);
  REQUIRE(exterior_derivative(b).is_zero());
  DetectionReport r = detect(b);
  CHECK(r.verdict != Verdict::Constant);
  if (r.verdict == Verdict::NotConstant) CHECK(has_rule(r, "Rem4.3-rank-inconsistency"));
}

TEST_CASE("conformal detection") {
  DetectionReport f1 = detect_conformal(form("(1 + x1)*dx[2]", 2));
  CHECK(f1.verdict == Verdict::ConformalConstant);
  CHECK(has_rule(f1, "Ex1.20-frobenius"));

  DetectionReport nf = detect_conformal(form("dx[1] + x3*dx[2]", 3));
  CHECK(nf.verdict == Verdict::NotConstant);
  CHECK(has_rule(nf, "Ex1.20-frobenius"));

  DetectionReport cv = detect_conformal(vec("x1*Dx[1,2]", 3));
  CHECK(cv.verdict == Verdict::ConformalConstant);
  CHECK(has_rule(cv, "Def1.17-content"));

  DetectionReport dual = detect_conformal(vec("(1 + x1)*Dx[1,2]", 3));
  CHECK(dual.verdict == Verdict::ConformalConstant);
  CHECK(has_rule(dual, "Ex1.21-frobenius"));

  CHECK_THROWS(detect_conformal(DiffForm(2, 1)));
  CHECK_THROWS(detect_conformal(MultiVector(2, 1)));
}

TEST_CASE("kernel systems") {
  auto kv = kernel_system(vec("Dx[1,2]", 3), QVector(3, 0));
  REQUIRE(kv.size() == 1);
  CHECK(kv[0][0] == 0);
  CHECK(kv[0][1] == 0);
  CHECK(kv[0][2] != 0);

  auto kf = kernel_system(form("dx[1,2]", 3), QVector(3, 0));
  REQUIRE(kf.size() == 1);
  CHECK(kf[0][2] != 0);

  auto full = kernel_system(form("dx[1,2] + dx[3,4]", 4), QVector(4, 0));
  CHECK(full.empty());
}

TEST_CASE("verify_chart ground truth") {
  Chart c;
  c.n = 3;
  c.forward = {parse_poly("x1 + x3^2", 3), parse_poly("x2", 3), parse_poly("x3", 3)};
  c.inverse = {parse_poly("x1 - x3^2", 3), parse_poly("x2", 3), parse_poly("x3", 3)};
  REQUIRE(c.validate());

  auto good = verify_chart(form("dx[1,2] - 2*x3*dx[2,3]", 3), c);
  CHECK(good.constant);
  auto bad = verify_chart(form("x1*dx[1,2]", 3), c);
  CHECK(!bad.constant);
  CHECK(!std::get<DiffForm>(bad.residual).is_zero());

  // Contravariant direction.
  auto corpus = positive_corpus(3, 2, Variance::Contravariant, 3, 5);
  for (const auto& s : corpus) CHECK(verify_chart(std::get<MultiVector>(s.obj), s.chart).constant);
}

TEST_CASE("constructive charts") {
  // Volume form with non-constant coefficient: formal chart, still verifiable.
  DiffForm v = form("(1 + x1^2)*dx[1,2,3]", 3);
  Chart cv = chart_from_volume_form(v, QVector(3, 0));
  CHECK(cv.formal);
  CHECK(verify_chart(v, cv).constant);

  DiffForm vc = form("3*dx[1,2]", 2);
  Chart cvc = chart_from_volume_form(vc, QVector(2, 0));
  CHECK(!cvc.formal);
  CHECK(cvc.validate());
  CHECK(verify_chart(vc, cvc).constant);
  CHECK_THROWS(chart_from_volume_form(form("x1*dx[1,2]", 2), QVector(2, 0)));

  // Exact 1-form with linear leading slot: polynomial inverse.
  DiffForm e = form("dx[1] + 2*x2*dx[2]", 2);
  Chart ce = chart_from_exact_1form(e, QVector(2, 0));
  CHECK(!ce.formal);
  CHECK(ce.validate());
  CHECK(verify_chart(e, ce).constant);

  // First coefficient vanishing at base: permuted slots.
  DiffForm e2 = form("x2*dx[1] + x1*dx[2] + dx[2]", 2);
  Chart ce2 = chart_from_exact_1form(e2, QVector(2, 0));
  CHECK(verify_chart(e2, ce2).constant);

  CHECK_THROWS(chart_from_exact_1form(form("x2*dx[1]", 2), QVector(2, 0)));
  CHECK_THROWS(chart_from_exact_1form(form("x1*dx[1]", 2), QVector(2, 0)));
}

TEST_CASE("codegree-1 contravariant system") {
  // Chart-derived symbols solve E[j,l] when the object is constant in the
  // chart coordinates.
  for (unsigned seed : {11u, 12u, 13u}) {
    auto corpus = positive_corpus(3, 2, Variance::Contravariant, 1, seed);
    const auto& V = std::get<MultiVector>(corpus[0].obj);
    Connection g = christoffel_from_chart(corpus[0].chart);
    Nm1System sys = nminus1_vector_system(V);
    REQUIRE(sys.sys.rows.size() == 9);
    CHECK(sys.sys.unknowns.size() == 18);
    for (size_t r = 0; r < sys.sys.rows.size(); ++r)
      CHECK(eval_gamma_linear(sys.sys.rows[r], g) == sys.sys.rhs[r]);
    // Bracket invariance: C vanishes for objects constant in some chart.
    CHECK(sys.C.is_zero());
    for (size_t i = 0; i + 1 < sys.constraints.size(); ++i) CHECK(sys.constraints[i].is_zero());
  }

  // C two ways.
  MultiVector W = vec("x2*Dx[1,2] + Dx[1,3]", 3);
  Nm1System sw = nminus1_vector_system(W);
  MultiVector br = schouten_bracket(W, W);
  CHECK(sw.C == br.coeff({1, 2, 3}) * Rational(-1, 2));
}

TEST_CASE("codegree-1 symmetric rows carry the bracket compatibility") {
  // With the lower-pair identification, the n=3 rows obey
  // F1(E[2,3]+E[3,2]) - F3(E[1,2]+E[2,1]) + F2(E[1,3]-E[3,1]) = 0
  // identically, and the same combination of right-hand sides equals -C.
  // Without the identification the coefficient matrix has full rank n^2.
  const int n = 3;
  MultiVector V = vec("(x1^2 + x2 + 1)*Dx[2,3] + (x2*x3 - 2)*Dx[1,3] + (x3 + 7*x1 + 5)*Dx[1,2]", n);
  Poly F1 = V.coeff({2, 3}), F2 = V.coeff({1, 3}), F3 = V.coeff({1, 2});
  Nm1System e = nminus1_vector_system(V);
  auto at = [&](int j, int l) {
    for (size_t r = 0; r < e.sys.rows.size(); ++r)
      if (e.sys.row_keys[r] == RowKey{j, MultiIndex{l}}) return r;
    REQUIRE(false);
    return size_t(0);
  };
  GammaLinear acc;
  auto addscaled = [&](size_t r, const Poly& s) {
    for (const auto& [k, p] : e.sys.rows[r]) {
      auto it = acc.find(k);
      if (it == acc.end())
        acc.emplace(k, p * s);
      else
        it->second += p * s;
    }
  };
  addscaled(at(2, 3), F1);
  addscaled(at(3, 2), F1);
  addscaled(at(1, 2), -F3);
  addscaled(at(2, 1), -F3);
  addscaled(at(1, 3), F2);
  addscaled(at(3, 1), -F2);
  for (const auto& [k, p] : acc) CHECK(p.is_zero());
  Poly rc = F1 * (e.sys.rhs[at(2, 3)] + e.sys.rhs[at(3, 2)]) -
            F3 * (e.sys.rhs[at(1, 2)] + e.sys.rhs[at(2, 1)]) +
            F2 * (e.sys.rhs[at(1, 3)] - e.sys.rhs[at(3, 1)]);
  CHECK(rc == -e.C);

  QVector pt{1, 1, 1};
  CHECK(rank(e.raw_matrix_at(pt)) == n * n);
  CHECK(rank(e.sys.matrix_at(pt)) == n * n - 1);
}

TEST_CASE("reports are auditable") {
  std::vector<DetectionReport> reps;
  reps.push_back(detect(form("dx[1,2] + dx[3,4]", 4)));
  reps.push_back(detect(vec("Dx[1,2] + Dx[3,4]", 4)));
  reps.push_back(detect(form("x2*dx[2]", 2), {{0, 1}}));
  for (const auto& r : reps) {
    REQUIRE(!r.reasons.empty());
    if (r.verdict == Verdict::Constant)
      CHECK((r.chart.has_value() || r.reasons[0].rule.find('.') != std::string::npos));
  }
}
