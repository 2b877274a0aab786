#pragma once

#include <map>
#include <vector>

#include "heights/hompoly2.hpp"
#include "heights/multiform.hpp"
#include "heights/rational.hpp"
#include "heights/semistability.hpp"

namespace heights {

/// Classical SL_2 invariants of a binary quartic
///   F = a X0^4 + b X0^3 X1 + c X0^2 X1^2 + d X0 X1^3 + e X1^4
/// in the binomial normalization a, 4B, 6C, 4D, e:
///   I = ae - 4BD + 3C^2,  J = det [[a,B,C],[B,C,D],[C,D,e]].
/// Their discriminant combination I^3 - 27 J^2 is Disc(F) / 256.
template <class R>
struct QuarticInvariants {
  R I;
  R J;
};

template <class R>
QuarticInvariants<R> invariants_quartic(const MultiForm<R>& form, const R& zero) {
  if (form.num_vars() != 2 || form.degree() != 4) {
    throw DomainError("invariants_quartic expects a binary form of degree 4", "degree");
  }
  const auto c = binary_coefficients(form, zero);
  const R& a = c[4];
  const R& b = c[3];
  const R& q = c[2];
  const R& d = c[1];
  const R& e = c[0];
  R I = a * e - b * d * Rational(1, 4) + q * q * Rational(1, 12);
  R J = a * q * e * Rational(1, 6) + b * q * d * Rational(1, 48) - a * d * d * Rational(1, 16) -
        b * b * e * Rational(1, 16) - q * q * q * Rational(1, 216);
  return {std::move(I), std::move(J)};
}

/// Discriminant of a binary cubic a X0^3 + b X0^2 X1 + c X0 X1^2 + d X1^3:
///   b^2 c^2 - 4 a c^3 - 4 b^3 d - 27 a^2 d^2 + 18 abcd.
/// Generates the invariant ring of binary cubics; vanishes iff there is a
/// repeated root.
template <class R>
R invariant_cubic_disc(const MultiForm<R>& form, const R& zero) {
  if (form.num_vars() != 2 || form.degree() != 3) {
    throw DomainError("invariant_cubic_disc expects a binary form of degree 3", "degree");
  }
  const auto k = binary_coefficients(form, zero);
  const R& a = k[3];
  const R& b = k[2];
  const R& c = k[1];
  const R& d = k[0];
  return b * b * c * c - a * c * c * c * Rational(4) - b * b * b * d * Rational(4) -
         a * a * d * d * Rational(27) + a * b * c * d * Rational(18);
}

/// Pencil of binary forms of degree d in {3, 4} over P^1 with trivial E:
/// sum_j c_j(s,t) X0^j X1^(d-j) with every c_j homogeneous of degree m.
/// The coefficients must have no common factor (the section is saturated).
class BinaryPencil {
 public:
  BinaryPencil(int d, int m, const std::map<int, HomPoly2>& coefficients);

  int d() const { return d_; }
  int m() const { return m_; }
  const MultiForm<HomPoly2>& form() const { return form_; }
  /// c_j, the zero polynomial of degree m when absent.
  HomPoly2 coefficient(int j) const;
  /// The binary form over the point [s : t].
  MultiForm<Rational> fiber(const Rational& s, const Rational& t) const;

 private:
  int d_;
  int m_;
  MultiForm<HomPoly2> form_;
};

struct GitHeightReport {
  Rational htGIT;
  Rational htInt;
  long contactLength = 0;
  int delta = 0;
  bool allFibersSemistable = false;

  friend bool operator==(const GitHeightReport&, const GitHeightReport&) = default;
};

/// A set of fibers sharing one verdict: the roots of a monic squarefree
/// polynomial in the affine coordinate t, the point at infinity s = 0, or
/// every fiber when the condition holds identically.
struct FiberLocus {
  enum class Kind { Affine, Infinity, Generic };
  Kind kind = Kind::Affine;
  UniPoly factor;
  StabilityVerdict verdict;

  friend bool operator==(const FiberLocus&, const FiberLocus&) = default;
};

/// delta used for the generator tuple: 6 for quartics (I^3, J^2), 4 for
/// cubics (Disc).
int generator_degree(int d);

/// Invariant tuple of the pencil as forms in (s, t).
QuarticInvariants<HomPoly2> pencil_quartic_invariants(const BinaryPencil& p);
HomPoly2 pencil_cubic_discriminant(const BinaryPencil& p);

/// GIT height of the generic fiber through the degree of the map to the
/// quotient, with the unstable-contact length as the gcd degree of the
/// pulled-back generator tuple. Errors when the generic fiber is unstable.
GitHeightReport git_height(const BinaryPencil& p);

/// Contact length recomputed pointwise from the root orders of the
/// invariants (squarefree decompositions and pairwise gcds).
long contact_length_by_orders(const BinaryPencil& p);

/// ht_int = ht_GIT + contactLength / delta, with the contact length taken
/// from the pointwise route.
bool verify_contact_identity(const BinaryPencil& p);

/// Fibers whose binary form is not stable: unstable loci (nullcone) and, for
/// quartics, strictly semistable loci (a double root but no triple root).
std::vector<FiberLocus> fiber_semistability_profile(const BinaryPencil& p);

}  // namespace heights
