#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heights/multiform.hpp"
#include "heights/rational.hpp"

namespace heights {

/// Diagonal one-parameter subgroup of SL_{N+1}: integer weights summing to 0.
class WeightVector {
 public:
  explicit WeightVector(std::vector<long> entries);

  const std::vector<long>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool is_zero() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<long> entries_;
};

enum class Stability { Stable, Semistable, Unstable, Unknown };

std::string_view to_string(Stability s);
Stability stability_from_string(std::string_view s);

struct StabilityVerdict {
  Stability status = Stability::Unknown;
  std::optional<WeightVector> certificate;  // present only when Unstable
  std::string rule;

  friend bool operator==(const StabilityVerdict&, const StabilityVerdict&) = default;
};

/// Singularity data of a hypersurface of degree d in P^N, consumed by the
/// sufficient semistability criteria.
struct SingularityProfile {
  int N = 1;
  int d = 2;
  int delta = 1;  // maximal multiplicity; 1 when smooth
  int s = -1;     // dimension of the singular locus; -1 when smooth
  bool tangent_cone_not_hyperplane_cone = false;
  bool semihomogeneous = false;
  bool odp_only = false;

  bool smooth() const { return delta == 1; }
  /// Throws DomainError naming the offending field.
  void validate() const;
};

/// Hilbert-Mumford weight: min over the support of <a, m>. A form is
/// destabilized by a exactly when this is positive.
long hm_weight(const MultiForm<Rational>& form, const WeightVector& a);

/// Semistability with respect to the diagonal torus: the barycenter
/// (d/(N+1), ..., d/(N+1)) against the Newton polytope of the support,
/// decided by exact linear programming. Coordinate dependent.
StabilityVerdict torus_semistable(const MultiForm<Rational>& form);

/// Torus decision for a bare support (exponent vectors of degree d).
StabilityVerdict torus_semistable_support(int num_vars, int degree,
                                          const std::vector<Exponent>& support);

/// Complete SL_2 decision for binary forms by root multiplicities: unstable
/// iff some root has multiplicity > d/2, stable iff all are < d/2.
StabilityVerdict binary_semistable(const MultiForm<Rational>& form);

/// Multiplicities of the roots of a nonzero binary form over the algebraic
/// closure, grouped: the root [0:1] (X0 = 0), the root [1:0] (X1 = 0), and the
/// remaining roots through squarefree decomposition. Only the largest value is
/// needed by the binary rule; all are returned for diagnostics.
struct BinaryRootData {
  int at_x0_zero = 0;
  int at_x1_zero = 0;
  std::vector<int> other;  // one entry per squarefree factor (multiplicity)
  int max_multiplicity() const;
};
BinaryRootData binary_root_multiplicities(const MultiForm<Rational>& form);

/// Sufficient numerical criteria from singularity data. Reports the
/// strongest conclusion reached (Stable over Semistable); Unknown when no
/// criterion applies.
StabilityVerdict criteria_engine(const SingularityProfile& profile);

}  // namespace heights
