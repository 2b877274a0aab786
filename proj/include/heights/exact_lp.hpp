#pragma once

#include <vector>

#include "heights/linalg.hpp"
#include "heights/rational.hpp"

namespace heights::lp {

/// maximize c.x subject to A x = b, x >= 0, over the rationals.
struct Problem {
  RationalMatrix a;
  std::vector<Rational> b;
  std::vector<Rational> objective;  // empty means pure feasibility
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  std::vector<Rational> x;
  Rational value;
};

/// Two-phase dense-tableau simplex with Bland's rule; exact and terminating.
Solution solve(const Problem& problem);

}  // namespace heights::lp
