#include "ccdet/exterior.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ccdet {

std::optional<SortedIndex> sort_index_tuple(std::vector<int> tuple) {
  int sign = 1;
  // Insertion sort, counting transpositions.
  for (size_t i = 1; i < tuple.size(); ++i)
    for (size_t j = i; j > 0 && tuple[j] < tuple[j - 1]; --j) {
      std::swap(tuple[j], tuple[j - 1]);
      sign = -sign;
    }
  for (size_t i = 1; i < tuple.size(); ++i)
    if (tuple[i] == tuple[i - 1]) return std::nullopt;
  return SortedIndex{std::move(tuple), sign};
}

int index_position(const MultiIndex& I, int v) {
  auto it = std::lower_bound(I.begin(), I.end(), v);
  if (it == I.end() || *it != v) return 0;
  return static_cast<int>(it - I.begin()) + 1;
}

MultiIndex erase_position(const MultiIndex& I, int pos) {
  MultiIndex r = I;
  r.erase(r.begin() + (pos - 1));
  return r;
}

MultiIndex complement(const MultiIndex& I, int n) {
  MultiIndex r;
  for (int v = 1; v <= n; ++v)
    if (index_position(I, v) == 0) r.push_back(v);
  return r;
}

std::vector<MultiIndex> all_multi_indices(int n, int p) {
  std::vector<MultiIndex> out;
  if (p < 0 || p > n) return out;
  MultiIndex cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == p) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::string multiindex_str(const MultiIndex& I) {
  std::string s = "[";
  for (size_t i = 0; i < I.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(I[i]);
  }
  return s + "]";
}

template <Variance V>
const Poly& Exterior<V>::coeff(const MultiIndex& I) const {
  auto it = coeffs_.find(I);
  if (it == coeffs_.end()) {
    static thread_local Poly zero;
    zero = Poly(n_);
    return zero;
  }
  return it->second;
}

template <Variance V>
void Exterior<V>::add(const MultiIndex& I, const Poly& c) {
  if (static_cast<int>(I.size()) != degree_) throw std::invalid_argument("Exterior::add: degree mismatch");
  if (c.nvars() != n_) throw std::invalid_argument("Exterior::add: coefficient arity mismatch");
  for (size_t i = 0; i < I.size(); ++i) {
    if (I[i] < 1 || I[i] > n_) throw std::invalid_argument("Exterior::add: index out of range");
    if (i > 0 && I[i] <= I[i - 1]) throw std::invalid_argument("Exterior::add: index not strictly increasing");
  }
  if (c.is_zero()) return;
  auto it = coeffs_.find(I);
  if (it == coeffs_.end()) {
    coeffs_.emplace(I, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

template <Variance V>
void Exterior<V>::add_tuple(const std::vector<int>& tuple, const Poly& c) {
  auto sorted = sort_index_tuple(tuple);
  if (!sorted) return;
  add(sorted->index, sorted->sign > 0 ? c : -c);
}

template <Variance V>
Exterior<V> Exterior<V>::operator+(const Exterior& o) const {
  if (n_ != o.n_ || degree_ != o.degree_) throw std::invalid_argument("Exterior: shape mismatch");
  Exterior r = *this;
  for (const auto& [I, c] : o.coeffs_) r.add(I, c);
  return r;
}

template <Variance V>
Exterior<V> Exterior<V>::operator-() const {
  Exterior r(n_, degree_);
  for (const auto& [I, c] : coeffs_) r.coeffs_.emplace(I, -c);
  return r;
}

template <Variance V>
Exterior<V> Exterior<V>::operator-(const Exterior& o) const { return *this + (-o); }

template <Variance V>
Exterior<V> Exterior<V>::operator*(const Poly& f) const {
  Exterior r(n_, degree_);
  for (const auto& [I, c] : coeffs_) {
    Poly p = c * f;
    if (!p.is_zero()) r.coeffs_.emplace(I, std::move(p));
  }
  return r;
}

template <Variance V>
Exterior<V> Exterior<V>::operator*(const Rational& c) const {
  return *this * Poly::constant(n_, c);
}

template <Variance V>
Exterior<V> Exterior<V>::monomial(int n, const MultiIndex& I, const Poly& c) {
  Exterior r(n, static_cast<int>(I.size()));
  r.add(I, c);
  return r;
}

template <Variance V>
Exterior<V> Exterior<V>::basis(int n, const MultiIndex& I) {
  return monomial(n, I, Poly::constant(n, 1));
}

template <Variance V>
std::string Exterior<V>::str() const {
  const char* token = V == Variance::Covariant ? "dx" : "Dx";
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [I, c] : coeffs_) {
    std::string piece;
    bool neg = false;
    if (degree_ == 0) {
      piece = c.str();
      if (!first && !piece.empty() && piece[0] == '-') {
        neg = true;
        piece = piece.substr(1);
      }
    } else if (c.is_constant()) {
      Rational v = c.constant_value();
      neg = v < 0;
      const Rational mag = neg ? Rational(-v) : v;
      piece = (mag == 1 ? "" : mag.str() + "*") + token + multiindex_str(I);
      if (neg && first) piece = "-" + piece;
    } else if (c.terms().size() == 1) {
      std::string cs = c.str();
      if (cs[0] == '-') {
        neg = true;
        cs = cs.substr(1);
      }
      piece = cs + "*" + token + multiindex_str(I);
      if (neg && first) piece = "-" + piece;
    } else {
      piece = "(" + c.str() + ")*" + token + multiindex_str(I);
    }
    if (first) {
      os << piece;
      first = false;
    } else {
      os << (neg ? " - " : " + ") << piece;
    }
  }
  return os.str();
}

template class Exterior<Variance::Covariant>;
template class Exterior<Variance::Contravariant>;

template <Variance V>
Exterior<V> wedge(const Exterior<V>& a, const Exterior<V>& b) {
  if (a.n() != b.n()) throw std::invalid_argument("wedge: dimension mismatch");
  const int deg = a.degree() + b.degree();
  if (deg > a.n()) return Exterior<V>(a.n(), a.n()); // zero by convention
  Exterior<V> r(a.n(), deg);
  for (const auto& [I, f] : a.coeffs())
    for (const auto& [J, g] : b.coeffs()) {
      std::vector<int> tuple = I;
      tuple.insert(tuple.end(), J.begin(), J.end());
      r.add_tuple(tuple, f * g);
    }
  return r;
}

template DiffForm wedge(const DiffForm&, const DiffForm&);
template MultiVector wedge(const MultiVector&, const MultiVector&);

DiffForm exterior_derivative(const DiffForm& a) {
  if (a.degree() >= a.n()) return DiffForm(a.n(), a.n()); // zero by convention
  DiffForm r(a.n(), a.degree() + 1);
  for (const auto& [I, f] : a.coeffs())
    for (int j = 1; j <= a.n(); ++j) {
      Poly df = f.diff(j);
      if (df.is_zero()) continue;
      std::vector<int> tuple;
      tuple.push_back(j);
      tuple.insert(tuple.end(), I.begin(), I.end());
      r.add_tuple(tuple, df);
    }
  return r;
}

DiffForm interior_vec_form(const MultiVector& X, const DiffForm& a) {
  if (X.n() != a.n()) throw std::invalid_argument("interior_vec_form: dimension mismatch");
  if (X.degree() != 1) throw std::invalid_argument("interior_vec_form: contracting field must have degree 1");
  if (a.degree() < 1) throw std::invalid_argument("interior_vec_form: form degree must be >= 1");
  DiffForm r(a.n(), a.degree() - 1);
  for (const auto& [I, f] : a.coeffs())
    for (int h = 1; h <= static_cast<int>(I.size()); ++h) {
      const Poly& xc = X.coeff({I[h - 1]});
      if (xc.is_zero()) continue;
      Poly c = xc * f;
      if (h % 2 == 0) c = -c;
      r.add(erase_position(I, h), c);
    }
  return r;
}

MultiVector interior_form_vec(const DiffForm& w, const MultiVector& V) {
  if (w.n() != V.n()) throw std::invalid_argument("interior_form_vec: dimension mismatch");
  if (w.degree() != 1) throw std::invalid_argument("interior_form_vec: contracting form must have degree 1");
  if (V.degree() < 1) throw std::invalid_argument("interior_form_vec: multivector degree must be >= 1");
  MultiVector r(V.n(), V.degree() - 1);
  for (const auto& [I, f] : V.coeffs())
    for (int h = 1; h <= static_cast<int>(I.size()); ++h) {
      const Poly& wc = w.coeff({I[h - 1]});
      if (wc.is_zero()) continue;
      Poly c = wc * f;
      if (h % 2 == 0) c = -c;
      r.add(erase_position(I, h), c);
    }
  return r;
}

DiffForm iota_pq(const MultiVector& V, const DiffForm& vol) {
  if (V.n() != vol.n()) throw std::invalid_argument("iota_pq: dimension mismatch");
  if (vol.degree() != vol.n()) throw std::invalid_argument("iota_pq: volume form must have top degree");
  if (V.degree() > V.n()) throw std::invalid_argument("iota_pq: degree out of range");
  const int n = V.n();
  DiffForm r(n, n - V.degree());
  for (const auto& [I, f] : V.coeffs()) {
    // i_{X1}( ... i_{Xq}(vol)): contract the last index first.
    DiffForm cur = vol;
    for (int k = static_cast<int>(I.size()); k >= 1; --k)
      cur = interior_vec_form(MultiVector::basis(n, {I[k - 1]}), cur);
    r = r + cur * f;
  }
  return r;
}

MultiVector iota_star_qp(const DiffForm& w, const MultiVector& Vn) {
  if (w.n() != Vn.n()) throw std::invalid_argument("iota_star_qp: dimension mismatch");
  if (Vn.degree() != Vn.n()) throw std::invalid_argument("iota_star_qp: multivector must have top degree");
  const int n = w.n();
  MultiVector r(n, n - w.degree());
  for (const auto& [I, f] : w.coeffs()) {
    MultiVector cur = Vn;
    for (int k = static_cast<int>(I.size()); k >= 1; --k)
      cur = interior_form_vec(DiffForm::basis(n, {I[k - 1]}), cur);
    r = r + cur * f;
  }
  return r;
}

MultiVector lie_bracket(const MultiVector& X, const MultiVector& Y) {
  if (X.n() != Y.n()) throw std::invalid_argument("lie_bracket: dimension mismatch");
  if (X.degree() != 1 || Y.degree() != 1) throw std::invalid_argument("lie_bracket: degree-1 fields required");
  const int n = X.n();
  MultiVector r(n, 1);
  for (const auto& [A, f] : X.coeffs())
    for (const auto& [B, g] : Y.coeffs()) {
      const int a = A[0], b = B[0];
      r.add({b}, f * g.diff(a));
      r.add({a}, -(g * f.diff(b)));
    }
  return r;
}

namespace {

// Left derivative with respect to the odd generator xi_k: degree drops by
// one, sign (-1)^(pos-1).
MultiVector xi_derivative(const MultiVector& A, int k) {
  MultiVector r(A.n(), A.degree() - 1);
  for (const auto& [I, f] : A.coeffs()) {
    const int pos = index_position(I, k);
    if (pos == 0) continue;
    r.add(erase_position(I, pos), pos % 2 == 1 ? f : -f);
  }
  return r;
}

MultiVector x_derivative(const MultiVector& A, int k) {
  MultiVector r(A.n(), A.degree());
  for (const auto& [I, f] : A.coeffs()) r.add(I, f.diff(k));
  return r;
}

// D(A,B) = sum_k (dA/dxi_k) ^ (dB/dx^k).
MultiVector odd_pairing(const MultiVector& A, const MultiVector& B) {
  MultiVector r(A.n(), A.degree() + B.degree() - 1);
  for (int k = 1; k <= A.n(); ++k) {
    MultiVector w = wedge(xi_derivative(A, k), x_derivative(B, k));
    if (w.degree() == r.degree()) r = r + w;
  }
  return r;
}

} // namespace

MultiVector schouten_bracket(const MultiVector& A, const MultiVector& B) {
  if (A.n() != B.n()) throw std::invalid_argument("schouten_bracket: dimension mismatch");
  const int q = A.degree(), r = B.degree();
  if (q < 1 || r < 1) throw std::invalid_argument("schouten_bracket: degrees must be >= 1");
  const int n = A.n();
  if (q + r - 1 > n) return MultiVector(n, std::min(q + r - 1, n)); // zero, degree capped
  const int s1 = (q + 1) % 2 == 0 ? 1 : -1;
  const int s2 = ((q - 1) * (r - 1) + r) % 2 == 0 ? 1 : -1;
  MultiVector result = odd_pairing(A, B) * Rational(s1) + odd_pairing(B, A) * Rational(s2);
  return result;
}

template <Variance V>
std::vector<Rational> eval_coeffs(const Exterior<V>& a, const std::vector<Rational>& point) {
  std::vector<Rational> out;
  for (const auto& I : all_multi_indices(a.n(), a.degree()))
    out.push_back(a.coeff(I).eval(point));
  return out;
}

template std::vector<Rational> eval_coeffs(const DiffForm&, const std::vector<Rational>&);
template std::vector<Rational> eval_coeffs(const MultiVector&, const std::vector<Rational>&);

} // namespace ccdet
