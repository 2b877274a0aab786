#include "heights/hompoly2.hpp"

#include <algorithm>
#include <sstream>

#include "heights/error.hpp"

namespace heights {

HomPoly2::HomPoly2(int degree) : degree_(degree), coeffs_(degree + 1) {
  if (degree < 0) throw DomainError("negative degree");
}

HomPoly2::HomPoly2(int degree, std::vector<Rational> coefficients)
    : degree_(degree), coeffs_(std::move(coefficients)) {
  if (degree < 0) throw DomainError("negative degree");
  if (static_cast<int>(coeffs_.size()) != degree + 1) {
    throw DomainError("a degree-" + std::to_string(degree) + " form in (s,t) needs " +
                      std::to_string(degree + 1) + " coefficients");
  }
}

bool HomPoly2::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

Rational HomPoly2::evaluate(const Rational& s, const Rational& t) const {
  Rational acc;
  for (int k = 0; k <= degree_; ++k) {
    if (coeffs_[k].is_zero()) continue;
    acc += coeffs_[k] * s.pow(degree_ - k) * t.pow(k);
  }
  return acc;
}

int HomPoly2::order_at_infinity() const {
  for (int k = degree_; k >= 0; --k) {
    if (!coeffs_[k].is_zero()) return degree_ - k;
  }
  return degree_;
}

HomPoly2 HomPoly2::pow(int exponent) const {
  if (exponent < 0) throw DomainError("negative power");
  HomPoly2 result = constant(1);
  for (int i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

HomPoly2& HomPoly2::operator+=(const HomPoly2& o) {
  if (o.degree_ != degree_) throw DomainError("adding forms of different degrees in (s,t)");
  for (int k = 0; k <= degree_; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

HomPoly2& HomPoly2::operator-=(const HomPoly2& o) {
  if (o.degree_ != degree_) throw DomainError("subtracting forms of different degrees in (s,t)");
  for (int k = 0; k <= degree_; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

HomPoly2& HomPoly2::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

HomPoly2 operator*(const HomPoly2& a, const HomPoly2& b) {
  HomPoly2 out(a.degree_ + b.degree_);
  for (int i = 0; i <= a.degree_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; j <= b.degree_; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

HomPoly2 HomPoly2::operator-() const { return *this * Rational(-1); }

std::string HomPoly2::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree_; k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const int es = degree_ - k;
    const bool unit = mag == Rational(1);
    bool wrote = false;
    if (!unit || (es == 0 && k == 0)) {
      os << mag;
      wrote = true;
    }
    auto var = [&](const char* name, int e) {
      if (e == 0) return;
      if (wrote) os << "*";
      os << name;
      if (e > 1) os << "^" << e;
      wrote = true;
    };
    var("s", es);
    var("t", k);
  }
  return os.str();
}

UniPoly dehomogenize(const HomPoly2& h) { return UniPoly(h.coefficients()); }

HomPoly2 homogenize(const UniPoly& f, int m) {
  if (m < 0) throw DomainError("negative homogenization degree");
  if (f.degree() > m) {
    throw DomainError("homogenize: declared degree " + std::to_string(m) +
                      " is below the polynomial degree " + std::to_string(f.degree()));
  }
  std::vector<Rational> c(m + 1);
  for (int k = 0; k <= f.degree(); ++k) c[k] = f.coefficient(k);
  return HomPoly2(m, std::move(c));
}

HomPoly2 gcd_hompoly2(const HomPoly2& a, const HomPoly2& b) {
  const bool za = a.is_zero();
  const bool zb = b.is_zero();
  if (za && zb) throw DomainError("gcd of zero polynomials");
  if (za || zb) {
    const HomPoly2& h = za ? b : a;
    const UniPoly u = dehomogenize(h).monic();
    return homogenize(u, h.degree());
  }
  const int e = std::min(a.order_at_infinity(), b.order_at_infinity());
  const UniPoly g = gcd_unipoly(dehomogenize(a), dehomogenize(b));
  return homogenize(g, g.degree() + e);
}

}  // namespace heights
