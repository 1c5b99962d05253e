#include "ccdet/detector.hpp"
#include "ccdet/oracle.hpp"

#include <doctest.h>

using namespace ccdet;

TEST_CASE("random charts invert exactly") {
  for (unsigned seed : {1u, 2u, 3u, 4u, 5u}) {
    for (int n = 2; n <= 5; ++n) {
      Chart c = random_chart(n, 2, 3, seed);
      CHECK(c.n == n);
      CHECK(!c.formal);
      CHECK(c.validate());
      // Centred: the origin is fixed.
      for (const auto& f : c.forward) CHECK(f.eval(QVector(n, 0)) == 0);
    }
  }
  Chart id = random_chart(3, 2, 0, 7);
  for (int i = 0; i < 3; ++i) CHECK(id.forward[i] == Poly::variable(3, i + 1));
}

TEST_CASE("random charts are deterministic") {
  Chart a = random_chart(4, 2, 3, 42);
  Chart b = random_chart(4, 2, 3, 42);
  CHECK(a.forward == b.forward);
  CHECK(a.inverse == b.inverse);
  Chart c = random_chart(4, 2, 3, 43);
  CHECK(a.forward != c.forward);
}

TEST_CASE("positive corpus is constant by construction") {
  for (int n = 2; n <= 4; ++n)
    for (int deg = 1; deg <= n; ++deg) {
      auto cov = positive_corpus(n, deg, Variance::Covariant, 3, 10 * n + deg);
      REQUIRE(cov.size() == 3);
      for (const auto& s : cov) {
        const auto& a = std::get<DiffForm>(s.obj);
        CHECK(!a.is_zero());
        CHECK(verify_chart(a, s.chart).constant);
      }
      auto con = positive_corpus(n, deg, Variance::Contravariant, 3, 20 * n + deg);
      for (const auto& s : con) {
        const auto& V = std::get<MultiVector>(s.obj);
        CHECK(!V.is_zero());
        CHECK(verify_chart(V, s.chart).constant);
      }
    }
}

TEST_CASE("negative corpus carries certified obstructions") {
  auto forms = negative_corpus(3, 2, Variance::Covariant, 5, 31);
  REQUIRE(forms.size() == 5);
  for (const auto& s : forms) {
    CHECK(s.obstruction_kind == "closedness");
    const auto& a = std::get<DiffForm>(s.obj);
    DiffForm d = exterior_derivative(a);
    CHECK(!d.is_zero());
    auto vals = eval_coeffs(d, s.witness_point);
    bool nonzero = false;
    for (const auto& v : vals) nonzero = nonzero || v != 0;
    CHECK(nonzero);
  }
  auto vecs = negative_corpus(4, 2, Variance::Contravariant, 5, 32);
  for (const auto& s : vecs) {
    CHECK(s.obstruction_kind == "self-bracket");
    const auto& V = std::get<MultiVector>(s.obj);
    MultiVector br = schouten_bracket(V, V);
    CHECK(!br.is_zero());
    auto vals = eval_coeffs(br, s.witness_point);
    bool nonzero = false;
    for (const auto& v : vals) nonzero = nonzero || v != 0;
    CHECK(nonzero);
  }
  // Obstruction-free degrees are rejected up front.
  CHECK_THROWS(negative_corpus(3, 3, Variance::Covariant, 1, 1));
  CHECK_THROWS(negative_corpus(3, 1, Variance::Contravariant, 1, 1));
  CHECK_THROWS(negative_corpus(3, 3, Variance::Contravariant, 1, 1));
  // Odd-degree self-brackets vanish identically by graded symmetry.
  CHECK_THROWS(negative_corpus(5, 3, Variance::Contravariant, 1, 1));
}

TEST_CASE("brute force bracket base cases") {
  const int n = 3;
  MultiVector X(n, 1), Y(n, 1);
  X.add({1}, Poly::variable(n, 2));
  Y.add({2}, Poly::constant(n, 1));
  CHECK(brute_force_sn_bracket(X, Y) == lie_bracket(X, Y));
  MultiVector W(n, 2);
  W.add({1, 2}, Poly::variable(n, 3));
  CHECK(brute_force_sn_bracket(X, W) == schouten_bracket(X, W));
  CHECK(brute_force_sn_bracket(W, W) == schouten_bracket(W, W));
}
