#include "heights/verify.hpp"

#include <charconv>

#include "heights/coeffs.hpp"
#include "heights/error.hpp"
#include "heights/git_binary.hpp"
#include "heights/random_gen.hpp"
#include "heights/semistability.hpp"

namespace heights::verify {

namespace {

constexpr std::size_t kMaxRecordedFailures = 10;

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("malformed integer '" + std::string(s) + "' in range");
  }
  return v;
}

std::string pencil_label(const char* kind, int index, int m) {
  return std::string(kind) + " #" + std::to_string(index) + " (m=" + std::to_string(m) + ")";
}

}  // namespace

Range Range::parse(std::string_view text) {
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(text.substr(0, dots));
    r.hi = parse_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw DomainError("empty range '" + std::string(text) + "'");
  return r;
}

void SuiteResult::fail(std::string message) {
  pass = false;
  if (failures.size() < kMaxRecordedFailures) failures.push_back(std::move(message));
}

SuiteResult identities(Range N, Range d) {
  SuiteResult r;
  r.name = "identities";
  if (N.lo < 1 || d.lo < 1) throw DomainError("identity grid needs N >= 1 and d >= 1");
  for (int n = N.lo; n <= N.hi; ++n) {
    for (int k = d.lo; k <= d.hi; ++k) {
      ++r.cases;
      try {
        // Both closed forms assert (1/12)Z membership internally.
        const Rational f = coeffs::f_stab(k, n);
        coeffs::w(n, k);
        if (k >= 2 && coeffs::f_from_w(k, n) != f) {
          r.fail("F(d,N) != F_stab(d,N) at d=" + std::to_string(k) + ", N=" + std::to_string(n));
        }
        if (n == 1 && k >= 2 && !f.is_zero()) r.fail("F_stab(" + std::to_string(k) + ",1) != 0");
        if (n == 3 && k == 3 && !f.is_zero()) r.fail("F_stab(3,3) != 0");
      } catch (const InvariantViolation& e) {
        r.fail(e.what());
      }
    }
  }
  r.notes.push_back("F_stab(3,3) = " + coeffs::f_stab(3, 3).str());
  return r;
}

SuiteResult monotonicity(Range N, Range delta) {
  SuiteResult r;
  r.name = "monotonicity";
  if (N.lo < 1 || delta.lo < 2) throw DomainError("monotonicity grid needs N >= 1 and delta >= 2");
  for (int n = N.lo; n <= N.hi; ++n) {
    Rational prev = coeffs::g(n, delta.lo);
    if (delta.lo == 2 && prev != coeffs::g_at_two(n)) {
      r.fail("g(" + std::to_string(n) + ",2) differs from (2N+1+3(-1)^N)/4");
    }
    for (int k = delta.lo + 1; k <= delta.hi; ++k) {
      ++r.cases;
      const Rational cur = coeffs::g(n, k);
      const std::string at = "N=" + std::to_string(n) + ", delta=" + std::to_string(k);
      if (n == 1) {
        if (!cur.is_zero()) r.fail("g_1 not zero at " + at);
      } else if (n == 3 && k == 3) {
        if (cur != prev) r.fail("expected the plateau g(3,2) = g(3,3)");
      } else if (!(cur < prev)) {
        r.fail("g not strictly decreasing at " + at);
      }
      if (cur > prev) r.fail("g increases at " + at);
      prev = cur;
    }
  }
  if (N.lo <= 3 && N.hi >= 3 && delta.lo <= 2 && delta.hi >= 3) {
    const bool plateau = coeffs::g(3, 2) == Rational(1) && coeffs::g(3, 3) == Rational(1);
    if (!plateau) r.fail("g(3,2) = g(3,3) = 1 fails");
    r.notes.push_back("plateau at N=3: g(3,2) = g(3,3) = 1, strictly decreasing from delta = 3 on");
  }
  return r;
}

SuiteResult contact(const ContactOptions& options) {
  SuiteResult r;
  r.name = "contact";
  gen::Rng rng(options.seed);
  auto run = [&](int d, int count, int max_m, const char* kind) {
    for (int i = 0; i < count; ++i) {
      const int m = gen::uniform_int(rng, 0, max_m);
      auto degeneration = gen::Degeneration::None;
      if (m >= 1) {
        const int pick = gen::uniform_int(rng, 0, 3);
        if (pick == 2) degeneration = gen::Degeneration::AtRationalPoint;
        if (pick == 3) degeneration = gen::Degeneration::AtInfinity;
      }
      const auto planted = gen::random_pencil(rng, d, m, degeneration);
      const auto& p = planted.pencil;
      const std::string label = pencil_label(kind, i, m);
      ++r.cases;
      try {
        if (!verify_contact_identity(p)) r.fail(label + ": contact identity fails");
        const GitHeightReport h = git_height(p);
        if (h.htGIT.sign() < 0 || h.htGIT > h.htInt) r.fail(label + ": ht_GIT outside [0, ht_int]");
        if ((h.htGIT == h.htInt) != h.allFibersSemistable) {
          r.fail(label + ": ht_GIT = ht_int does not match all-fibers-semistable");
        }
        if (d == 3 && (!h.htGIT.is_zero() || h.contactLength != 4L * m)) {
          r.fail(label + ": cubic pencil must have ht_GIT = 0 and contact length 4m");
        }
        const auto profile = fiber_semistability_profile(p);
        if (degeneration != gen::Degeneration::None) {
          if (binary_semistable(p.fiber(planted.s, planted.t)).status != Stability::Unstable) {
            r.fail(label + ": planted fiber is not unstable");
          }
          if (h.allFibersSemistable) r.fail(label + ": planted unstable fiber missed");
        }
        // Every rational locus agrees with the direct binary decision.
        for (const auto& locus : profile) {
          std::optional<MultiForm<Rational>> fiber;
          if (locus.kind == FiberLocus::Kind::Infinity) fiber = p.fiber(0, 1);
          if (locus.kind == FiberLocus::Kind::Affine && locus.factor.degree() == 1) {
            fiber = p.fiber(1, -locus.factor.coefficient(0));
          }
          if (fiber && binary_semistable(*fiber).status != locus.verdict.status) {
            r.fail(label + ": fiber profile disagrees with the binary rule");
          }
        }
      } catch (const std::exception& e) {
        r.fail(label + ": " + e.what());
      }
    }
  };
  run(4, options.quartics, options.max_m_quartic, "quartic");
  run(3, options.cubics, options.max_m_cubic, "cubic");
  r.notes.push_back("seed " + std::to_string(options.seed));
  return r;
}

std::vector<SweepRow> sweep(Range d, Range N) {
  if (N.lo < 1 || d.lo < 1) throw DomainError("sweep needs N >= 1 and d >= 1");
  std::vector<SweepRow> rows;
  for (int k = d.lo; k <= d.hi; ++k) {
    for (int n = N.lo; n <= N.hi; ++n) rows.push_back({k, n, coeffs::f_stab(k, n), coeffs::w(n, k)});
  }
  return rows;
}

}  // namespace heights::verify
