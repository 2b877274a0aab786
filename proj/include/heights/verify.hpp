#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "heights/rational.hpp"

namespace heights::verify {

/// Inclusive integer range written "lo..hi" (or a single integer).
struct Range {
  int lo = 0;
  int hi = 0;
  static Range parse(std::string_view text);
};

struct SuiteResult {
  std::string name;
  bool pass = true;
  long cases = 0;
  std::vector<std::string> notes;
  std::vector<std::string> failures;  // first few counterexamples

  void fail(std::string message);
};

/// F = F_stab identity, (1/12)Z membership of F_stab and w, and the pinned
/// vanishing values F_stab(3,3) = 0 and F_stab(d,1) = 0.
SuiteResult identities(Range N, Range d);

/// g(N, .) non-increasing; strictly decreasing for N = 2 and N >= 4; the
/// N = 3 plateau g(3,2) = g(3,3) = 1 followed by strict decrease; g(1, .) = 0.
SuiteResult monotonicity(Range N, Range delta);

struct ContactOptions {
  std::uint64_t seed = 0;
  int quartics = 100;
  int cubics = 100;
  int max_m_quartic = 4;
  int max_m_cubic = 3;
};

/// Randomized pencils: ht_int = ht_GIT + contactLength / delta, ht_GIT = ht_int
/// iff every fiber is semistable, planted unstable fibers are detected, and
/// cubic pencils have ht_GIT = 0 with contact length 4m.
SuiteResult contact(const ContactOptions& options);

struct SweepRow {
  int d;
  int N;
  Rational f_stab;
  Rational w;  // w_{N,d}
};

std::vector<SweepRow> sweep(Range d, Range N);

}  // namespace heights::verify
