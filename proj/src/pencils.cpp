#include "heights/pencils.hpp"

#include <algorithm>

#include "heights/coeffs.hpp"
#include "heights/error.hpp"

namespace heights {

void PencilDescriptor::validate() const {
  if (N < 1) throw DomainError("N must be at least 1", "N");
  if (d < 2) throw DomainError("d must be at least 2", "d");
  if (genus < 0) throw DomainError("genus must be non-negative", "genus");
  if (!degM && !htInt) throw DomainError("one of degM or htInt is required", "degM");
  if (degM && htInt) {
    const Rational expected = Rational(*degM) - Rational(d) * slope();
    if (expected != *htInt) {
      throw DomainError("htInt " + htInt->str() + " disagrees with degM - d degE/(N+1) = " +
                            expected.str(),
                        "htInt");
    }
  }
  if (muMaxE < slope()) {
    throw DomainError("muMaxE must be at least the slope degE/(N+1) = " + slope().str(), "muMaxE");
  }
  for (const auto& r : singularPoints) {
    if (r.multiplicity < 2) {
      throw DomainError("singular points have multiplicity at least 2", "singularPoints");
    }
  }
}

namespace pencils {

namespace {

void require_semihomogeneous(const PencilDescriptor& p) {
  const bool all = std::all_of(p.singularPoints.begin(), p.singularPoints.end(),
                               [](const SingularFiberRecord& r) { return r.semihomogeneous; });
  if (!all) throw DomainError("formula out of validity domain: non-semihomogeneous singular point", "singularPoints");
}

std::vector<int> multiplicities(const PencilDescriptor& p) {
  std::vector<int> out;
  out.reserve(p.singularPoints.size());
  for (const auto& r : p.singularPoints) out.push_back(r.multiplicity);
  return out;
}

}  // namespace

Rational ht_int(const PencilDescriptor& p) {
  p.validate();
  if (p.htInt) return *p.htInt;
  return Rational(*p.degM) - Rational(p.d) * p.slope();
}

BudgetCheck singularity_budget(const PencilDescriptor& p) {
  require_semihomogeneous(p);
  BudgetCheck out;
  for (const auto& r : p.singularPoints) out.lhs += Rational(r.multiplicity - 1).pow(p.N);
  out.rhs = Rational(p.N + 1) * Rational(p.d - 1).pow(p.N) * ht_int(p);
  out.ok = out.lhs == out.rhs;
  return out;
}

bool singularity_budget_check(const PencilDescriptor& p) { return singularity_budget(p).ok; }

Rational ht_gk_stab(const PencilDescriptor& p) {
  require_semihomogeneous(p);
  Rational value = -Rational(p.N + 1) * coeffs::w(p.N, p.d) * ht_int(p);
  for (const auto& r : p.singularPoints) value += coeffs::w(p.N, r.multiplicity);
  return value;
}

UpperBoundVerdict upper_bound_verdict(const PencilDescriptor& p) {
  UpperBoundVerdict out;
  out.bound = coeffs::f_stab(p.d, p.N) * ht_int(p);
  const auto ms = multiplicities(p);
  out.equality = coeffs::classify_equality_case(p.N, ms);
  if (singularity_budget_check(p)) {
    const Rational h = ht_gk_stab(p);
    if (h > out.bound) throw InvariantViolation("ht_GK,stab exceeds F_stab * ht_int");
    if ((h == out.bound) != out.equality) {
      throw InvariantViolation("equality in the upper bound disagrees with the equality-case classification");
    }
  }
  return out;
}

Rational canonical_degree_tilde(int genus) {
  if (genus < 0) throw DomainError("genus must be non-negative", "genus");
  return genus > 0 ? Rational(2 * genus - 2) : Rational(-1);
}

bool generization_condition(const PencilDescriptor& p) {
  return ht_int(p) > canonical_degree_tilde(p.genus) + Rational(p.d) * (p.muMaxE - p.slope());
}

bool genericity_bound(const PencilDescriptor& p) {
  p.validate();
  if (!p.degM) throw DomainError("the genericity bound needs degM", "degM");
  return Rational(*p.degM) > Rational(2 * p.genus - 1) + Rational(p.d) * p.muMaxE;
}

HeightReport full_report(const PencilDescriptor& p) {
  HeightReport r;
  r.htInt = ht_int(p);
  r.htGKStab = ht_gk_stab(p);
  const auto ub = upper_bound_verdict(p);
  r.bound = ub.bound;
  r.equalityCase = ub.equality;
  r.singularityBudgetOk = singularity_budget_check(p);
  r.generizationConditionOk = generization_condition(p);
  if (p.degM) r.genericityBoundOk = genericity_bound(p);
  if (r.singularityBudgetOk && (r.htGKStab > r.bound || (r.htGKStab == r.bound) != r.equalityCase)) {
    throw InvariantViolation("inconsistent height report");
  }
  return r;
}

}  // namespace pencils
}  // namespace heights
