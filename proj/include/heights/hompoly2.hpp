#pragma once

#include <string>
#include <vector>

#include "heights/rational.hpp"
#include "heights/unipoly.hpp"

namespace heights {

/// Homogeneous polynomial of degree m in the variables (s, t): a section of
/// O(m) on the projective line. The affine chart is s = 1 with coordinate t;
/// the point s = 0 is the point at infinity.
///
/// Zero polynomials keep their degree, so sums and products of zero
/// coefficients stay well typed.
class HomPoly2 {
 public:
  HomPoly2() = default;
  /// Zero polynomial of degree m.
  explicit HomPoly2(int degree);
  /// coefficients[k] multiplies s^(m-k) t^k; the vector must have m+1 entries.
  HomPoly2(int degree, std::vector<Rational> coefficients);

  static HomPoly2 constant(const Rational& c) { return HomPoly2(0, {c}); }

  int degree() const { return degree_; }
  bool is_zero() const;
  /// Coefficient of s^(m-k) t^k.
  const Rational& coefficient_t(int k) const { return coeffs_.at(k); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& s, const Rational& t) const;

  /// Multiplicity of the point at infinity: the largest e with s^e | h.
  /// Equals the degree for the zero polynomial.
  int order_at_infinity() const;

  HomPoly2 pow(int exponent) const;

  HomPoly2& operator+=(const HomPoly2& o);
  HomPoly2& operator-=(const HomPoly2& o);
  HomPoly2& operator*=(const Rational& c);
  friend HomPoly2 operator+(HomPoly2 a, const HomPoly2& b) { return a += b; }
  friend HomPoly2 operator-(HomPoly2 a, const HomPoly2& b) { return a -= b; }
  friend HomPoly2 operator*(const HomPoly2& a, const HomPoly2& b);
  friend HomPoly2 operator*(HomPoly2 a, const Rational& c) { return a *= c; }
  friend HomPoly2 operator*(const Rational& c, HomPoly2 a) { return a *= c; }
  HomPoly2 operator-() const;

  friend bool operator==(const HomPoly2&, const HomPoly2&) = default;

  std::string str() const;

 private:
  int degree_ = 0;
  std::vector<Rational> coeffs_{Rational{}};
};

/// Set s = 1.
UniPoly dehomogenize(const HomPoly2& h);

/// Pad with powers of s up to degree m; m below the t-degree is an error.
HomPoly2 homogenize(const UniPoly& f, int m);

/// Gcd in the bihomogeneous ring, normalized so that its dehomogenization is
/// monic. gcd(h, 0) = h (normalized). Both zero is an error.
HomPoly2 gcd_hompoly2(const HomPoly2& a, const HomPoly2& b);

}  // namespace heights
