#include "ccdet/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ccdet {

namespace {

unsigned total(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

} // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = total(a), db = total(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  if (c != 0) p.terms_.emplace(Exponents(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int var) {
  if (var < 1 || var > nvars) throw std::invalid_argument("Poly::variable: index out of range");
  Poly p(nvars);
  Exponents e(nvars, 0);
  e[var - 1] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("Poly::constant_value: not constant");
  return terms_.begin()->second;
}

long long Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<long long>(total(terms_.begin()->first));
}

int Poly::degree_in(int var) const {
  if (var < 1 || var > nvars_) throw std::invalid_argument("Poly::degree_in: index out of range");
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var - 1]));
  return d;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("Poly::add_term: exponent arity mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable-count mismatch");
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable-count mismatch");
  Poly r(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(nvars_);
      for (int k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly r = Poly::constant(nvars_, 1);
  Poly base = *this;
  while (k) {
    if (k & 1u) r *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return r;
}

Poly Poly::diff(int var) const {
  if (var < 1 || var > nvars_) throw std::invalid_argument("Poly::diff: index out of range");
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    const unsigned k = e[var - 1];
    if (k == 0) continue;
    Exponents de = e;
    de[var - 1] = k - 1;
    r.add_term(de, c * k);
  }
  return r;
}

Poly Poly::integrate(int var) const {
  if (var < 1 || var > nvars_) throw std::invalid_argument("Poly::integrate: index out of range");
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents ie = e;
    ie[var - 1] = e[var - 1] + 1;
    r.add_term(ie, c / Rational(ie[var - 1]));
  }
  return r;
}

Poly Poly::compose(const std::vector<Poly>& subst) const {
  if (static_cast<int>(subst.size()) != nvars_) throw std::invalid_argument("Poly::compose: arity mismatch");
  const int m = subst.empty() ? 0 : subst[0].nvars();
  for (const auto& s : subst)
    if (s.nvars() != m) throw std::invalid_argument("Poly::compose: substituents disagree on arity");
  Poly r(m);
  for (const auto& [e, c] : terms_) {
    Poly t = Poly::constant(m, c);
    for (int k = 0; k < nvars_; ++k)
      if (e[k] > 0) t *= subst[k].pow(e[k]);
    r += t;
  }
  return r;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("Poly::eval: arity mismatch");
  Rational r(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int k = 0; k < nvars_; ++k)
      for (unsigned i = 0; i < e[k]; ++i) t *= point[k];
    r += t;
  }
  return r;
}

Poly Poly::substitute_var(int var, const Poly& value) const {
  if (value.nvars() != nvars_) throw std::invalid_argument("Poly::substitute_var: arity mismatch");
  std::vector<Poly> subst;
  subst.reserve(nvars_);
  for (int k = 1; k <= nvars_; ++k)
    subst.push_back(k == var ? value : Poly::variable(nvars_, k));
  return compose(subst);
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string mono;
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(k + 1);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty()) {
      os << mag.str();
    } else {
      if (mag != 1) os << mag.str() << "*";
      os << mono;
    }
  }
  return os.str();
}

std::optional<Poly> exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.nvars() != b.nvars()) throw std::invalid_argument("exact_divide: variable-count mismatch");
  const int n = a.nvars();
  Poly rem = a;
  Poly quot(n);
  const auto& ltb = *b.terms().begin();
  while (!rem.is_zero()) {
    const auto& lta = *rem.terms().begin();
    Exponents qe(n);
    for (int k = 0; k < n; ++k) {
      if (lta.first[k] < ltb.first[k]) return std::nullopt;
      qe[k] = lta.first[k] - ltb.first[k];
    }
    Poly t(n);
    t.add_term(qe, lta.second / ltb.second);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

namespace {

// Highest-index variable occurring in p, or 0 if constant.
int main_variable(const Poly& p) {
  int v = 0;
  for (int k = p.nvars(); k >= 1; --k)
    if (p.degree_in(k) > 0) return k;
  return v;
}

// View p as univariate in var: coefficient polynomials indexed by degree.
std::map<unsigned, Poly> univariate_view(const Poly& p, int var) {
  std::map<unsigned, Poly> out;
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    const unsigned d = f[var - 1];
    f[var - 1] = 0;
    auto [it, inserted] = out.try_emplace(d, Poly(p.nvars()));
    it->second.add_term(f, c);
  }
  return out;
}

Poly from_univariate(const std::map<unsigned, Poly>& cs, int var, int nvars) {
  Poly r(nvars);
  const Poly x = Poly::variable(nvars, var);
  for (const auto& [d, c] : cs) r += c * x.pow(d);
  return r;
}

Poly normalize_leading(const Poly& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.terms().begin()->second);
}

// Pseudo-remainder of a by b with respect to var (deg_var(b) >= 1).
Poly pseudo_remainder(Poly a, const Poly& b, int var) {
  auto bu = univariate_view(b, var);
  const unsigned db = bu.rbegin()->first;
  const Poly lb = bu.rbegin()->second;
  const Poly x = Poly::variable(a.nvars(), var);
  while (!a.is_zero()) {
    auto au = univariate_view(a, var);
    const unsigned da = au.rbegin()->first;
    if (da < db) break;
    const Poly la = au.rbegin()->second;
    a = a * lb - b * la * x.pow(da - db);
  }
  return a;
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("poly_gcd: variable-count mismatch");
  if (a.is_zero()) return normalize_leading(b);
  if (b.is_zero()) return normalize_leading(a);
  const int va = main_variable(a), vb = main_variable(b);
  if (va == 0 || vb == 0) return Poly::constant(a.nvars(), 1);
  const int v = std::max(va, vb);
  if (a.degree_in(v) == 0 || b.degree_in(v) == 0) {
    // One side is free of the main variable: gcd divides its coefficients.
    const Poly& flat = a.degree_in(v) == 0 ? a : b;
    const Poly& tall = a.degree_in(v) == 0 ? b : a;
    Poly g = flat;
    for (const auto& [d, c] : univariate_view(tall, v)) g = poly_gcd(g, c);
    return normalize_leading(g);
  }

  auto content = [&](const Poly& p) {
    Poly g(p.nvars());
    for (const auto& [d, c] : univariate_view(p, v)) g = poly_gcd(g, c);
    return g;
  };

  const Poly ca = content(a), cb = content(b);
  Poly pa = *exact_divide(a, ca);
  Poly pb = *exact_divide(b, cb);
  if (univariate_view(pa, v).rbegin()->first < univariate_view(pb, v).rbegin()->first) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Poly r = pseudo_remainder(pa, pb, v);
    if (!r.is_zero()) r = *exact_divide(r, content(r));
    pa = pb;
    pb = r;
  }
  return normalize_leading(poly_gcd(ca, cb) * pa);
}

Poly poly_gcd(const std::vector<Poly>& ps) {
  if (ps.empty()) throw std::invalid_argument("poly_gcd: empty list");
  Poly g(ps[0].nvars());
  for (const auto& p : ps) g = poly_gcd(g, p);
  return g;
}

} // namespace ccdet
