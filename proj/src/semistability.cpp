#include "heights/semistability.hpp"

#include <algorithm>
#include <numeric>

#include "heights/error.hpp"
#include "heights/exact_lp.hpp"
#include "heights/linalg.hpp"
#include "heights/unipoly.hpp"

namespace heights {

WeightVector::WeightVector(std::vector<long> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2) throw DomainError("a weight vector needs at least two entries", "weights");
  if (std::accumulate(entries_.begin(), entries_.end(), 0L) != 0) {
    throw DomainError("weights of a one-parameter subgroup of SL must sum to zero", "weights");
  }
}

bool WeightVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](long x) { return x == 0; });
}

std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "Stable";
    case Stability::Semistable: return "Semistable";
    case Stability::Unstable: return "Unstable";
    case Stability::Unknown: return "Unknown";
  }
  return "Unknown";
}

Stability stability_from_string(std::string_view s) {
  if (s == "Stable") return Stability::Stable;
  if (s == "Semistable") return Stability::Semistable;
  if (s == "Unstable") return Stability::Unstable;
  if (s == "Unknown") return Stability::Unknown;
  throw DomainError("unknown stability status '" + std::string(s) + "'", "status");
}

void SingularityProfile::validate() const {
  if (N < 1) throw DomainError("N must be at least 1", "N");
  if (d < 2) throw DomainError("d must be at least 2", "d");
  if (delta < 1 || delta > d) throw DomainError("delta must lie in [1, d]", "delta");
  if (s < -1 || s > N - 1) throw DomainError("s must lie in [-1, N-1]", "s");
  if ((delta == 1) != (s == -1)) {
    throw DomainError("a smooth hypersurface has delta = 1 and s = -1, and only then", "s");
  }
  if (odp_only && delta > 2) throw DomainError("ordinary double points have multiplicity 2", "odpOnly");
  if (odp_only && delta == 2 && s != 0) {
    throw DomainError("ordinary double points are isolated (s = 0)", "odpOnly");
  }
  if (semihomogeneous && s > 0) {
    throw DomainError("semihomogeneous singularities are isolated (s <= 0)", "semihomogeneous");
  }
}

long hm_weight(const MultiForm<Rational>& form, const WeightVector& a) {
  if (form.is_zero()) throw DomainError("zero form has no semistability type");
  if (static_cast<int>(a.size()) != form.num_vars()) {
    throw DomainError("weight vector length must equal the number of variables", "weights");
  }
  long best = 0;
  bool first = true;
  for (const auto& [e, c] : form.terms()) {
    long v = 0;
    for (std::size_t i = 0; i < e.size(); ++i) v += a.entries()[i] * e[i];
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

namespace {

long weight_of(const WeightVector& a, const Exponent& e) {
  long v = 0;
  for (std::size_t i = 0; i < e.size(); ++i) v += a.entries()[i] * e[i];
  return v;
}

// Integer vector proportional to the rational vector v with positive scale,
// reduced by the gcd of its entries.
std::vector<long> primitive_integer(const std::vector<Rational>& v) {
  BigInt l = 1;
  for (const auto& x : v) l = lcm(l, x.denominator());
  std::vector<BigInt> ints;
  BigInt g = 0;
  for (const auto& x : v) {
    BigInt n = x.numerator() * (l / x.denominator());
    g = gcd(g, n);
    ints.push_back(n);
  }
  std::vector<long> out;
  for (auto& n : ints) {
    if (g != 0) n /= g;
    if (!n.fits_slong_p()) throw InvariantViolation("certificate entry overflows a machine integer");
    out.push_back(n.get_si());
  }
  return out;
}

}  // namespace

StabilityVerdict torus_semistable_support(int num_vars, int degree,
                                          const std::vector<Exponent>& support) {
  if (support.empty()) throw DomainError("zero form has no semistability type");
  const int n = num_vars;
  const std::size_t k = support.size();

  // Barycenter membership: sum_j lambda_j (N+1) m_j = d * (1, ..., 1).
  lp::Problem member;
  member.a.assign(n, std::vector<Rational>(k));
  member.b.assign(n, Rational(degree));
  for (std::size_t j = 0; j < k; ++j) {
    for (int i = 0; i < n; ++i) member.a[i][j] = Rational(n * support[j][i]);
  }
  const auto inside = lp::solve(member);

  StabilityVerdict verdict;
  if (inside.status == lp::Status::Infeasible) {
    // Separating weight: sum a_i = 0 and <a, m> >= 1 on the support, with
    // a = a_plus - a_minus and one slack per support point.
    lp::Problem sep;
    const std::size_t cols = 2 * n + k;
    sep.a.assign(k + 1, std::vector<Rational>(cols));
    sep.b.assign(k + 1, Rational(1));
    for (std::size_t j = 0; j < k; ++j) {
      for (int i = 0; i < n; ++i) {
        sep.a[j][i] = Rational(support[j][i]);
        sep.a[j][n + i] = Rational(-support[j][i]);
      }
      sep.a[j][2 * n + j] = Rational(-1);
    }
    for (int i = 0; i < n; ++i) {
      sep.a[k][i] = Rational(1);
      sep.a[k][n + i] = Rational(-1);
    }
    sep.b[k] = Rational(0);
    const auto cert = lp::solve(sep);
    if (cert.status != lp::Status::Optimal) {
      throw InvariantViolation("LP duality failure: barycenter outside the hull but no separating weight");
    }
    std::vector<Rational> a(n);
    for (int i = 0; i < n; ++i) a[i] = cert.x[i] - cert.x[n + i];
    WeightVector w(primitive_integer(a));
    for (const auto& e : support) {
      if (weight_of(w, e) <= 0) throw InvariantViolation("unsound destabilizing certificate");
    }
    verdict.status = Stability::Unstable;
    verdict.certificate = std::move(w);
    verdict.rule = "torus: barycenter outside the Newton polytope";
    return verdict;
  }

  // Full dimension of the support inside the hyperplane sum = d.
  RationalMatrix diffs;
  for (std::size_t j = 1; j < k; ++j) {
    std::vector<Rational> row(n);
    for (int i = 0; i < n; ++i) row[i] = Rational(support[j][i] - support[0][i]);
    diffs.push_back(std::move(row));
  }
  bool interior = rank(diffs) == n - 1;
  if (interior) {
    // Relative interior: maximize t with lambda_j = mu_j + t, mu, t >= 0.
    lp::Problem rel;
    rel.a.assign(n, std::vector<Rational>(k + 1));
    rel.b.assign(n, Rational(degree));
    for (int i = 0; i < n; ++i) {
      Rational row_sum;
      for (std::size_t j = 0; j < k; ++j) {
        rel.a[i][j] = Rational(n * support[j][i]);
        row_sum += rel.a[i][j];
      }
      rel.a[i][k] = row_sum;
    }
    rel.objective.assign(k + 1, Rational{});
    rel.objective[k] = Rational(1);
    const auto best = lp::solve(rel);
    if (best.status != lp::Status::Optimal) {
      throw InvariantViolation("relative-interior LP must be feasible and bounded");
    }
    interior = best.value.sign() > 0;
  }
  verdict.status = interior ? Stability::Stable : Stability::Semistable;
  verdict.rule = interior ? "torus: barycenter in the interior of the Newton polytope"
                          : "torus: barycenter on the boundary of the Newton polytope";
  return verdict;
}

StabilityVerdict torus_semistable(const MultiForm<Rational>& form) {
  if (form.is_zero()) throw DomainError("zero form has no semistability type");
  return torus_semistable_support(form.num_vars(), form.degree(), form.support());
}

int BinaryRootData::max_multiplicity() const {
  int m = std::max(at_x0_zero, at_x1_zero);
  for (int x : other) m = std::max(m, x);
  return m;
}

BinaryRootData binary_root_multiplicities(const MultiForm<Rational>& form) {
  if (form.num_vars() != 2) throw DomainError("expected a binary form", "numVars");
  if (form.is_zero()) throw DomainError("zero form has no semistability type");
  const auto c = binary_coefficients(form, Rational{});
  const int d = form.degree();
  // f(x) = sum_j c_j x^j with x = X0 / X1.
  const UniPoly f(c);
  BinaryRootData out;
  out.at_x0_zero = f.valuation();
  out.at_x1_zero = d - f.degree();
  std::vector<Rational> shifted(c.begin() + out.at_x0_zero, c.begin() + f.degree() + 1);
  for (const auto& sf : squarefree_decomposition(UniPoly(std::move(shifted)))) {
    out.other.push_back(sf.multiplicity);
  }
  return out;
}

StabilityVerdict binary_semistable(const MultiForm<Rational>& form) {
  const BinaryRootData roots = binary_root_multiplicities(form);
  const int d = form.degree();
  const int k = roots.max_multiplicity();
  StabilityVerdict v;
  if (2 * k > d) {
    v.status = Stability::Unstable;
    v.rule = "binary: root of multiplicity " + std::to_string(k) + " > d/2";
    if (roots.at_x0_zero == k) v.certificate = WeightVector({1, -1});
    else if (roots.at_x1_zero == k) v.certificate = WeightVector({-1, 1});
  } else if (2 * k == d) {
    v.status = Stability::Semistable;
    v.rule = "binary: maximal root multiplicity equals d/2";
  } else {
    v.status = Stability::Stable;
    v.rule = "binary: all root multiplicities < d/2";
  }
  if (v.certificate && hm_weight(form, *v.certificate) <= 0) {
    throw InvariantViolation("unsound binary certificate");
  }
  return v;
}

StabilityVerdict criteria_engine(const SingularityProfile& p) {
  p.validate();
  struct Fired {
    Stability status;
    std::string rule;
  };
  std::vector<Fired> fired;
  const int N = p.N, d = p.d, delta = p.delta;
  const int span = std::min(N + 1, p.s + 3);

  if (p.smooth()) {
    if (N >= 2 && d >= 3) fired.push_back({Stability::Stable, "smooth of degree >= 3 (Mumford)"});
    if (d == 2) fired.push_back({Stability::Semistable, "smooth quadric (Mumford)"});
  }
  if (p.odp_only && !p.smooth() && N >= 2 && d >= 3) {
    fired.push_back({Stability::Semistable, "only ordinary double points, N >= 2, d >= 3"});
  }
  if (d > delta * span) {
    fired.push_back({Stability::Stable, "d > delta * min(N+1, s+3)"});
  } else if (d >= delta * span) {
    fired.push_back({Stability::Semistable, "d >= delta * min(N+1, s+3)"});
  }
  if (!p.smooth() && p.tangent_cone_not_hyperplane_cone && N >= 2) {
    if (d > (delta - 1) * span) {
      fired.push_back({Stability::Stable, "tangent cone not a hyperplane cone, d > (delta-1) * min(N+1, s+3)"});
    } else if (d >= (delta - 1) * span) {
      fired.push_back({Stability::Semistable, "tangent cone not a hyperplane cone, d >= (delta-1) * min(N+1, s+3)"});
    }
  }
  if (!p.smooth() && p.semihomogeneous) {
    if (N >= 2 && d >= 3 * (delta - 1)) {
      fired.push_back({Stability::Semistable, "semihomogeneous, N >= 2 and d >= 3(delta-1)"});
    }
    if (d >= N + 1 && d * N >= delta * (N + 1)) {
      fired.push_back({Stability::Semistable, "semihomogeneous, d >= N+1 and d >= delta(1 + 1/N)"});
    }
  }
  if (N == 3 && d == 3 && p.odp_only) {
    fired.push_back({Stability::Semistable, "cubic surface with at most ordinary double points"});
  }

  StabilityVerdict v;
  v.status = Stability::Unknown;
  v.rule = "no sufficient criterion applies";
  for (Stability want : {Stability::Stable, Stability::Semistable}) {
    auto it = std::find_if(fired.begin(), fired.end(), [&](const Fired& f) { return f.status == want; });
    if (it != fired.end()) {
      v.status = it->status;
      v.rule = it->rule;
      break;
    }
  }
  return v;
}

}  // namespace heights
