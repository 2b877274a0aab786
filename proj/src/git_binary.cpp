#include "heights/git_binary.hpp"

#include <algorithm>

#include "heights/error.hpp"

namespace heights {

BinaryPencil::BinaryPencil(int d, int m, const std::map<int, HomPoly2>& coefficients)
    : d_(d), m_(m), form_(2, d == 3 || d == 4 ? d : 4) {
  if (d != 3 && d != 4) throw DomainError("binary pencils are supported for d in {3, 4}", "d");
  if (m < 0) throw DomainError("coefficient degree m must be non-negative", "m");
  std::optional<HomPoly2> content;
  for (const auto& [j, c] : coefficients) {
    if (j < 0 || j > d) throw DomainError("coefficient index must lie in [0, d]", "coefficients");
    if (c.degree() != m) {
      throw DomainError("coefficient of X0^" + std::to_string(j) + " must have degree m = " +
                            std::to_string(m),
                        "coefficients");
    }
    if (c.is_zero()) continue;
    form_.add_term({j, d - j}, c);
    content = content ? gcd_hompoly2(*content, c) : gcd_hompoly2(c, HomPoly2(m));
  }
  if (form_.is_zero()) throw DomainError("pencil has no nonzero coefficient", "coefficients");
  if (content->degree() > 0) {
    throw DomainError("coefficients share the factor " + content->str() +
                          ": the pencil contains whole fibers",
                      "coefficients");
  }
}

HomPoly2 BinaryPencil::coefficient(int j) const {
  return form_.coefficient_or({j, d_ - j}, HomPoly2(m_));
}

MultiForm<Rational> BinaryPencil::fiber(const Rational& s, const Rational& t) const {
  if (s.is_zero() && t.is_zero()) throw DomainError("[0 : 0] is not a point of the projective line");
  return form_.map_coefficients([&](const HomPoly2& c) { return c.evaluate(s, t); });
}

int generator_degree(int d) {
  if (d == 4) return 6;
  if (d == 3) return 4;
  throw DomainError("binary pencils are supported for d in {3, 4}", "d");
}

QuarticInvariants<HomPoly2> pencil_quartic_invariants(const BinaryPencil& p) {
  if (p.d() != 4) throw DomainError("quartic invariants need d = 4", "d");
  return invariants_quartic(p.form(), HomPoly2(p.m()));
}

HomPoly2 pencil_cubic_discriminant(const BinaryPencil& p) {
  if (p.d() != 3) throw DomainError("the cubic discriminant needs d = 3", "d");
  return invariant_cubic_disc(p.form(), HomPoly2(p.m()));
}

GitHeightReport git_height(const BinaryPencil& p) {
  GitHeightReport r;
  r.delta = generator_degree(p.d());
  r.htInt = Rational(p.m());
  if (p.d() == 4) {
    const auto [I, J] = pencil_quartic_invariants(p);
    if (I.is_zero() && J.is_zero()) {
      throw DomainError("GIT height undefined: point outside semistable locus");
    }
    const HomPoly2 base = gcd_hompoly2(I.pow(3), J.pow(2));
    r.contactLength = base.degree();
    r.htGIT = Rational(6L * p.m() - r.contactLength, 6);
  } else {
    const HomPoly2 disc = pencil_cubic_discriminant(p);
    if (disc.is_zero()) throw DomainError("GIT height undefined: point outside semistable locus");
    // The quotient of binary cubics is a point: the map is constant and the
    // whole pulled-back discriminant is contact with the unstable locus.
    r.contactLength = disc.degree();
    r.htGIT = Rational(0);
  }
  const auto profile = fiber_semistability_profile(p);
  r.allFibersSemistable = std::none_of(profile.begin(), profile.end(), [](const FiberLocus& l) {
    return l.verdict.status == Stability::Unstable;
  });

  if (r.htInt != r.htGIT + Rational(r.contactLength, r.delta)) {
    throw InvariantViolation("contact identity fails");
  }
  if (r.htGIT.sign() < 0 || r.htGIT > r.htInt) throw InvariantViolation("GIT height out of [0, ht_int]");
  if ((r.htGIT == r.htInt) != r.allFibersSemistable) {
    throw InvariantViolation("ht_GIT = ht_int must hold exactly when every fiber is semistable");
  }
  return r;
}

namespace {

struct OrderedFactor {
  UniPoly factor;
  int order;
};

// Affine root orders grouped by squarefree decomposition.
std::vector<OrderedFactor> affine_orders(const HomPoly2& h) {
  std::vector<OrderedFactor> out;
  for (auto& sf : squarefree_decomposition(dehomogenize(h))) out.push_back({sf.factor, sf.multiplicity});
  return out;
}

}  // namespace

long contact_length_by_orders(const BinaryPencil& p) {
  if (p.d() == 3) {
    const HomPoly2 disc = pencil_cubic_discriminant(p);
    if (disc.is_zero()) throw DomainError("GIT height undefined: point outside semistable locus");
    long total = disc.order_at_infinity();
    for (const auto& f : affine_orders(disc)) total += static_cast<long>(f.factor.degree()) * f.order;
    return total;
  }
  const auto [I, J] = pencil_quartic_invariants(p);
  if (I.is_zero() && J.is_zero()) throw DomainError("GIT height undefined: point outside semistable locus");
  // Length at a point is min(3 ord I, 2 ord J); an identically zero
  // invariant imposes no condition.
  auto local = [](bool i_zero, long oi, bool j_zero, long oj) {
    if (i_zero) return 2 * oj;
    if (j_zero) return 3 * oi;
    return std::min(3 * oi, 2 * oj);
  };
  long total = local(I.is_zero(), I.order_at_infinity(), J.is_zero(), J.order_at_infinity());
  if (I.is_zero() || J.is_zero()) {
    const HomPoly2& h = I.is_zero() ? J : I;
    const long weight = I.is_zero() ? 2 : 3;
    for (const auto& f : affine_orders(h)) total += weight * f.factor.degree() * f.order;
    return total;
  }
  for (const auto& fi : affine_orders(I)) {
    for (const auto& fj : affine_orders(J)) {
      const UniPoly common = gcd_unipoly(fi.factor, fj.factor);
      total += static_cast<long>(common.degree()) * std::min(3L * fi.order, 2L * fj.order);
    }
  }
  return total;
}

bool verify_contact_identity(const BinaryPencil& p) {
  const GitHeightReport r = git_height(p);
  const long contact = contact_length_by_orders(p);
  return contact == r.contactLength && r.htInt == r.htGIT + Rational(contact, r.delta);
}

std::vector<FiberLocus> fiber_semistability_profile(const BinaryPencil& p) {
  std::vector<FiberLocus> out;
  auto add = [&](FiberLocus::Kind kind, UniPoly factor, Stability status, std::string rule) {
    FiberLocus l;
    l.kind = kind;
    l.factor = std::move(factor);
    l.verdict.status = status;
    l.verdict.rule = std::move(rule);
    out.push_back(std::move(l));
  };
  auto add_loci = [&](const HomPoly2& h, Stability status, const std::string& rule) {
    if (h.order_at_infinity() > 0) add(FiberLocus::Kind::Infinity, UniPoly{}, status, rule);
    const UniPoly u = dehomogenize(h);
    if (u.is_zero()) return;
    for (const auto& sf : squarefree_decomposition(u)) add(FiberLocus::Kind::Affine, sf.factor, status, rule);
  };

  if (p.d() == 3) {
    const HomPoly2 disc = pencil_cubic_discriminant(p);
    const std::string rule = "cubic discriminant vanishes (double root)";
    if (disc.is_zero()) {
      add(FiberLocus::Kind::Generic, UniPoly{}, Stability::Unstable, rule);
      return out;
    }
    add_loci(disc, Stability::Unstable, rule);
    return out;
  }

  const auto [I, J] = pencil_quartic_invariants(p);
  const std::string unstable_rule = "I = J = 0 (nullcone)";
  if (I.is_zero() && J.is_zero()) {
    add(FiberLocus::Kind::Generic, UniPoly{}, Stability::Unstable, unstable_rule);
    return out;
  }
  const HomPoly2 common = gcd_hompoly2(I, J);
  const HomPoly2 disc = (I.pow(3) - J.pow(2) * Rational(27)) * Rational(256);
  const std::string semistable_rule = "discriminant vanishes, I and J not both zero";
  if (disc.is_zero()) {
    add(FiberLocus::Kind::Generic, UniPoly{}, Stability::Semistable, semistable_rule);
  }
  add_loci(common, Stability::Unstable, unstable_rule);
  if (disc.is_zero()) return out;

  // Strictly semistable fibers: roots of Disc that are not roots of gcd(I, J).
  if (disc.order_at_infinity() > 0 && common.order_at_infinity() == 0) {
    add(FiberLocus::Kind::Infinity, UniPoly{}, Stability::Semistable, semistable_rule);
  }
  const UniPoly disc_radical = squarefree_part(dehomogenize(disc));
  const UniPoly common_affine = dehomogenize(common);
  UniPoly rest = disc_radical;
  if (!common_affine.is_constant()) {
    rest = exact_quotient(disc_radical, gcd_unipoly(disc_radical, common_affine));
  }
  if (!rest.is_constant()) add(FiberLocus::Kind::Affine, rest.monic(), Stability::Semistable, semistable_rule);
  return out;
}

}  // namespace heights
