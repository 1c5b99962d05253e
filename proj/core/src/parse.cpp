#include "ccdet/parse.hpp"

#include <cctype>
#include <sstream>

namespace ccdet {

namespace {

class Scanner {
public:
  Scanner(const std::string& text, int n) : s_(text), n_(n) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eof() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("parse error at position " + std::to_string(pos_) + ": " + msg);
  }

  bool at_basis() {
    skip_ws();
    return pos_ + 1 < s_.size() && (s_[pos_] == 'd' || s_[pos_] == 'D') && s_[pos_ + 1] == 'x';
  }

  Integer integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer");
    return Integer(s_.substr(start, pos_ - start));
  }

  unsigned small_uint() {
    Integer v = integer();
    if (v > 1000000) fail("integer too large");
    return static_cast<unsigned>(v);
  }

  Rational rational() {
    Integer num = integer();
    if (consume('/')) {
      Integer den = integer();
      if (den == 0) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  // basis := ('dx'|'Dx') '[' int (',' int)* ']'
  std::pair<Variance, std::vector<int>> basis() {
    skip_ws();
    const Variance v = s_[pos_] == 'd' ? Variance::Covariant : Variance::Contravariant;
    pos_ += 2;
    expect('[');
    std::vector<int> idx;
    do {
      int k = static_cast<int>(small_uint());
      if (k < 1 || k > n_) fail("basis index out of range 1.." + std::to_string(n_));
      idx.push_back(k);
    } while (consume(','));
    expect(']');
    return {v, idx};
  }

  // primary := rational | x<k> | '(' polyexpr ')'
  Poly poly_primary() {
    skip_ws();
    if (consume('(')) {
      Poly p = polyexpr();
      expect(')');
      return p;
    }
    if (peek() == 'x') {
      ++pos_;
      int k = static_cast<int>(small_uint());
      if (k < 1 || k > n_) fail("variable index out of range 1.." + std::to_string(n_));
      return Poly::variable(n_, k);
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) return Poly::constant(n_, rational());
    fail("expected polynomial primary");
  }

  Poly poly_power() {
    Poly p = poly_primary();
    if (consume('^')) p = p.pow(small_uint());
    return p;
  }

  // product of powers; stops before a basis token
  Poly poly_product() {
    Poly p = poly_power();
    size_t save = pos_;
    while (consume('*')) {
      if (at_basis()) {
        pos_ = save;
        break;
      }
      p *= poly_power();
      save = pos_;
    }
    return p;
  }

  Poly polyexpr() {
    bool neg = false;
    if (consume('-'))
      neg = true;
    else
      consume('+');
    Poly p = poly_product();
    if (neg) p = -p;
    while (true) {
      if (consume('+')) {
        p += poly_product();
      } else if (consume('-')) {
        p -= poly_product();
      } else {
        return p;
      }
    }
  }

  Object object() {
    bool have_variance = false;
    Variance variance = Variance::Covariant;
    int degree = -1;
    // Accumulate raw (tuple, coeff) pairs until the shape is known.
    std::vector<std::pair<std::vector<int>, Poly>> terms;
    bool first = true;
    while (true) {
      int sign = 1;
      if (consume('-')) {
        sign = -1;
      } else if (!consume('+') && !first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Poly coeff = Poly::constant(n_, sign);
      std::vector<int> tuple;
      if (at_basis()) {
        auto [v, idx] = basis();
        set_variance(have_variance, variance, v);
        tuple = std::move(idx);
      } else {
        coeff *= poly_product();
        if (consume('*')) {
          if (!at_basis()) fail("expected basis after '*'");
          auto [v, idx] = basis();
          set_variance(have_variance, variance, v);
          tuple = std::move(idx);
        }
      }
      if (degree < 0)
        degree = static_cast<int>(tuple.size());
      else if (degree != static_cast<int>(tuple.size()))
        fail("degree inhomogeneity");
      terms.emplace_back(std::move(tuple), std::move(coeff));
      if (eof()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
    }
    if (variance == Variance::Covariant) {
      DiffForm a(n_, degree);
      for (auto& [t, c] : terms) a.add_tuple(t, c);
      return a;
    }
    MultiVector a(n_, degree);
    for (auto& [t, c] : terms) a.add_tuple(t, c);
    return a;
  }

  size_t pos() const { return pos_; }

private:
  void set_variance(bool& have, Variance& cur, Variance v) {
    if (have && cur != v) fail("mixed dx and Dx in one object");
    have = true;
    cur = v;
  }

  const std::string& s_;
  int n_;
  size_t pos_ = 0;
};

} // namespace

Object parse_object(const std::string& text, int n) {
  if (n < 1) throw ParseError("dimension must be >= 1");
  Scanner sc(text, n);
  Object obj = sc.object();
  if (!sc.eof()) sc.fail("trailing input");
  return obj;
}

Poly parse_poly(const std::string& text, int n) {
  Scanner sc(text, n);
  Poly p = sc.polyexpr();
  if (!sc.eof()) sc.fail("trailing input");
  return p;
}

Rational parse_rational(const std::string& text) {
  Scanner sc(text, 1);
  bool neg = false;
  Rational r;
  if (sc.consume('-')) neg = true;
  r = sc.rational();
  if (!sc.eof()) sc.fail("trailing input");
  return neg ? Rational(-r) : r;
}

std::vector<Rational> parse_point(const std::string& text, int n) {
  std::vector<Rational> pt;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) pt.push_back(parse_rational(piece));
  if (static_cast<int>(pt.size()) != n)
    throw ParseError("point has " + std::to_string(pt.size()) + " coordinates, expected " + std::to_string(n));
  return pt;
}

Chart parse_chart(const std::string& text, int n) {
  Chart chart;
  chart.n = n;
  chart.forward.assign(n, Poly(n));
  std::vector<bool> seen_fwd(n, false), seen_inv(n, false);
  bool any_inv = false;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    if (line == "FORMAL") {
      chart.formal = true;
      continue;
    }
    bool inv = false;
    std::string rest = line;
    if (rest.rfind("inv", 0) == 0) {
      inv = true;
      rest = rest.substr(3);
      size_t c = rest.find_first_not_of(" \t");
      if (c == std::string::npos) throw ParseError("chart line " + std::to_string(lineno) + ": malformed");
      rest = rest.substr(c);
    }
    const char lead = inv ? 'x' : 'u';
    if (rest.empty() || rest[0] != lead)
      throw ParseError("chart line " + std::to_string(lineno) + ": expected '" + lead + "<i> = <poly>'");
    size_t eq = rest.find('=');
    if (eq == std::string::npos) throw ParseError("chart line " + std::to_string(lineno) + ": missing '='");
    int idx = 0;
    try {
      idx = std::stoi(rest.substr(1, eq - 1));
    } catch (...) {
      throw ParseError("chart line " + std::to_string(lineno) + ": bad index");
    }
    if (idx < 1 || idx > n) throw ParseError("chart line " + std::to_string(lineno) + ": index out of range");
    Poly p = parse_poly(rest.substr(eq + 1), n);
    if (inv) {
      if (!any_inv) {
        chart.inverse.assign(n, Poly(n));
        any_inv = true;
      }
      chart.inverse[idx - 1] = p;
      seen_inv[idx - 1] = true;
    } else {
      chart.forward[idx - 1] = p;
      seen_fwd[idx - 1] = true;
    }
  }
  for (int i = 0; i < n; ++i)
    if (!seen_fwd[i]) throw ParseError("chart: missing forward component u" + std::to_string(i + 1));
  if (chart.formal) {
    if (any_inv) throw ParseError("chart: FORMAL chart must not list inverse components");
  } else {
    for (int i = 0; i < n; ++i)
      if (!any_inv || !seen_inv[i])
        throw ParseError("chart: missing inverse component x" + std::to_string(i + 1));
  }
  if (!chart.validate()) throw ParseError("chart: round-trip identity fails");
  return chart;
}

std::string render_chart(const Chart& chart) {
  std::ostringstream os;
  for (int i = 1; i <= chart.n; ++i) os << "u" << i << " = " << chart.forward[i - 1].str() << "\n";
  if (chart.formal) {
    os << "FORMAL\n";
  } else {
    for (int i = 1; i <= chart.n; ++i) os << "inv x" << i << " = " << chart.inverse[i - 1].str() << "\n";
  }
  return os.str();
}

std::string render_object(const Object& obj) {
  return std::visit([](const auto& a) { return a.str(); }, obj);
}

} // namespace ccdet
