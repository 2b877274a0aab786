#include "heights/unipoly.hpp"

#include <sstream>

#include "heights/error.hpp"
#include "heights/linalg.hpp"

namespace heights {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int exponent) {
  if (exponent < 0) throw DomainError("negative exponent");
  std::vector<Rational> v(exponent + 1);
  v[exponent] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rational& root) { return UniPoly{-root, Rational(1)}; }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coefficient(int i) const {
  if (i < 0 || i > degree()) return Rational{};
  return coeffs_[i];
}

Rational UniPoly::leading() const { return is_zero() ? Rational{} : coeffs_.back(); }

int UniPoly::valuation() const {
  if (is_zero()) throw DomainError("valuation of the zero polynomial");
  int v = 0;
  while (coeffs_[v].is_zero()) ++v;
  return v;
}

Rational UniPoly::evaluate(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this * leading().inverse();
}

UniPoly UniPoly::pow(int exponent) const {
  if (exponent < 0) throw DomainError("negative polynomial power");
  UniPoly result = constant(1);
  UniPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const { return *this * Rational(-1); }

std::string UniPoly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (i == 0 || !unit) os << mag;
    if (i > 0 && !unit) os << "*";
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  const int dq = a.degree() - db;
  if (dq < 0) return {UniPoly{}, a};
  std::vector<Rational> quot(dq + 1);
  const Rational inv_lead = b.leading().inverse();
  for (int k = dq; k >= 0; --k) {
    const Rational q = rem[k + db] * inv_lead;
    quot[k] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= q * b.coefficient(j);
  }
  rem.resize(db);
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvariantViolation("exact_quotient: divisor does not divide dividend");
  return q;
}

UniPoly gcd_unipoly(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of zero polynomials");
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).remainder;
    // Keep intermediate coefficients small.
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (f.is_constant()) return out;
  const UniPoly fm = f.monic();
  const UniPoly df = fm.derivative();
  const UniPoly a0 = gcd_unipoly(fm, df);
  UniPoly b = exact_quotient(fm, a0);
  UniPoly c = exact_quotient(df, a0);
  UniPoly d = c - b.derivative();
  for (int i = 1; !b.is_constant(); ++i) {
    const UniPoly a = gcd_unipoly(b, d);
    if (!a.is_constant()) out.push_back({a, i});
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative();
  }
  return out;
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree part of the zero polynomial");
  if (f.is_constant()) return UniPoly::constant(1);
  return exact_quotient(f.monic(), gcd_unipoly(f, f.derivative()));
}

Rational resultant_binary(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of a zero polynomial");
  const int m = f.degree();
  const int n = g.degree();
  const int size = m + n;
  RationalMatrix s(size, std::vector<Rational>(size));
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j <= m; ++j) s[r][r + j] = f.coefficient(m - j);
  }
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j <= n; ++j) s[n + r][r + j] = g.coefficient(n - j);
  }
  return determinant(std::move(s));
}

}  // namespace heights
