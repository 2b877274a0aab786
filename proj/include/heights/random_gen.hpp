#pragma once

#include <cstdint>
#include <random>

#include "heights/git_binary.hpp"
#include "heights/hompoly2.hpp"
#include "heights/rational.hpp"

namespace heights::gen {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20241016;

int uniform_int(Rng& rng, int lo, int hi);

/// Integer-valued HomPoly2 of degree m with coefficients in [-range, range].
HomPoly2 random_hompoly2(Rng& rng, int m, int range);

/// Where a planted unstable fiber sits.
enum class Degeneration { None, AtRationalPoint, AtInfinity };

/// Random pencil of binary forms of degree d in {3, 4}, coefficient degree
/// m, whose generic fiber is semistable. With a degeneration, the fiber over
/// the chosen point is forced to have a root of multiplicity d-1 (so it is
/// unstable); this needs m >= 1. The planted point is returned in `where`
/// as [s : t].
struct PlantedPencil {
  BinaryPencil pencil;
  Degeneration degeneration;
  Rational s, t;
};
PlantedPencil random_pencil(Rng& rng, int d, int m, Degeneration degeneration, int range = 5);

}  // namespace heights::gen
