#pragma once

#include <optional>
#include <vector>

#include "heights/rational.hpp"

namespace heights {

struct SingularFiberRecord {
  int multiplicity = 2;  // delta_P >= 2
  bool semihomogeneous = true;
  friend bool operator==(const SingularFiberRecord&, const SingularFiberRecord&) = default;
};

/// Combinatorial model of a pencil H in P(E) -> C of degree-d hypersurfaces
/// of dimension N-1: degrees of E and of the twisting line bundle M, the
/// genus of C, the maximal slope of E, and one record per singular point
/// (at most one per fiber).
struct PencilDescriptor {
  int N = 1;
  int d = 2;
  int genus = 0;
  long degE = 0;
  Rational muMaxE;
  std::optional<long> degM;
  std::optional<Rational> htInt;
  std::vector<SingularFiberRecord> singularPoints;
  std::optional<bool> allFibersSemistable;

  Rational slope() const { return Rational(degE) / Rational(N + 1); }
  /// Throws DomainError naming the offending field.
  void validate() const;

  friend bool operator==(const PencilDescriptor&, const PencilDescriptor&) = default;
};

struct HeightReport {
  Rational htInt;
  Rational htGKStab;
  Rational bound;  // F_stab(d, N) * htInt
  bool equalityCase = false;
  bool singularityBudgetOk = false;
  bool generizationConditionOk = false;
  std::optional<bool> genericityBoundOk;  // absent when deg M is not given

  friend bool operator==(const HeightReport&, const HeightReport&) = default;
};

namespace pencils {

/// deg M - d deg E / (N+1), or the explicit override.
Rational ht_int(const PencilDescriptor& p);

struct BudgetCheck {
  bool ok = false;
  Rational lhs;  // sum over singular points of (delta_P - 1)^N
  Rational rhs;  // (N+1)(d-1)^N ht_int
};

/// Count of singular points weighted by (delta_P - 1)^N against
/// (N+1)(d-1)^N ht_int. Requires all records semihomogeneous.
BudgetCheck singularity_budget(const PencilDescriptor& p);
bool singularity_budget_check(const PencilDescriptor& p);

/// -(N+1) w_{N,d} ht_int + sum_P w_{N,delta_P}. Evaluated even when the
/// budget check fails; callers flag that case.
Rational ht_gk_stab(const PencilDescriptor& p);

struct UpperBoundVerdict {
  Rational bound;
  bool equality = false;
};

/// F_stab(d,N) ht_int and the equality classification. When the budget
/// holds, asserts ht_gk_stab <= bound with equality exactly in the
/// classified cases.
UpperBoundVerdict upper_bound_verdict(const PencilDescriptor& p);

/// (2g-2)~: 2g-2 for g > 0 and -1 for g = 0.
Rational canonical_degree_tilde(int genus);

/// ht_int > (2g-2)~ + d (mu_max(E) - mu(E)).
bool generization_condition(const PencilDescriptor& p);

/// deg M > 2g - 1 + d mu_max(E); deg M is required.
bool genericity_bound(const PencilDescriptor& p);

HeightReport full_report(const PencilDescriptor& p);

}  // namespace pencils
}  // namespace heights
