#pragma once

#include <vector>

#include "heights/rational.hpp"

namespace heights {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact determinant by Gaussian elimination over Q.
Rational determinant(RationalMatrix m);

/// Rank of an arbitrary (possibly non-square) matrix.
int rank(RationalMatrix m);

}  // namespace heights
