#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "heights/rational.hpp"

namespace heights {

/// Dense univariate polynomial over the rationals in the variable t.
/// Coefficient i multiplies t^i; trailing zeros are never stored.
class UniPoly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = -1;

  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(std::initializer_list<Rational> coefficients);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int exponent);
  /// The linear polynomial t - root.
  static UniPoly linear_root(const Rational& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Coefficient of t^i, zero beyond the degree.
  Rational coefficient(int i) const;
  Rational leading() const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Order of vanishing at t = 0; zero polynomial is rejected.
  int valuation() const;

  Rational evaluate(const Rational& t) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly pow(int exponent) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  UniPoly operator-() const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string str(char var = 't') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

/// Euclidean division; the divisor must be nonzero.
DivMod divmod(const UniPoly& a, const UniPoly& b);

/// Exact division; throws InvariantViolation when b does not divide a.
UniPoly exact_quotient(const UniPoly& a, const UniPoly& b);

/// Monic gcd. Both inputs zero is an error.
UniPoly gcd_unipoly(const UniPoly& a, const UniPoly& b);

struct SquarefreeFactor {
  UniPoly factor;  // monic, squarefree, non-constant
  int multiplicity;
  friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// Yun's algorithm. The product of factor^multiplicity equals f up to its
/// leading coefficient; factors are pairwise coprime and sorted by
/// multiplicity. A nonzero constant yields an empty list.
std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& f);

/// Monic squarefree part (product of the distinct irreducible factors).
UniPoly squarefree_part(const UniPoly& f);

/// Resultant as the determinant of the Sylvester matrix.
Rational resultant_binary(const UniPoly& f, const UniPoly& g);

}  // namespace heights
