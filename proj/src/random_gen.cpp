#include "heights/random_gen.hpp"

#include <map>

#include "heights/error.hpp"

namespace heights::gen {

int uniform_int(Rng& rng, int lo, int hi) {
  // Fixed arithmetic mapping keeps streams identical across standard libraries.
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

HomPoly2 random_hompoly2(Rng& rng, int m, int range) {
  std::vector<Rational> c(m + 1);
  for (auto& x : c) x = Rational(uniform_int(rng, -range, range));
  return HomPoly2(m, std::move(c));
}

PlantedPencil random_pencil(Rng& rng, int d, int m, Degeneration degeneration, int range) {
  if (degeneration != Degeneration::None && m < 1) {
    throw DomainError("planting a degenerate fiber needs m >= 1", "m");
  }
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Rational s = 1, t = 0;
    HomPoly2 vanishing = HomPoly2::constant(1);
    if (degeneration == Degeneration::AtRationalPoint) {
      t = Rational(uniform_int(rng, -3, 3));
      vanishing = HomPoly2(1, {-t, Rational(1)});  // t - r s
    } else if (degeneration == Degeneration::AtInfinity) {
      s = 0;
      t = 1;
      vanishing = HomPoly2(1, {Rational(1), Rational(0)});  // s
    }
    std::map<int, HomPoly2> coeffs;
    for (int j = 0; j <= d; ++j) {
      // Forcing c_j for j <= d-2 leaves X0^(d-1) (a X0 + b X1) on that fiber.
      const bool forced = degeneration != Degeneration::None && j <= d - 2;
      coeffs[j] = forced ? vanishing * random_hompoly2(rng, m - 1, range) : random_hompoly2(rng, m, range);
    }
    try {
      BinaryPencil p(d, m, coeffs);
      if (d == 4) {
        const auto inv = pencil_quartic_invariants(p);
        if (inv.I.is_zero() && inv.J.is_zero()) continue;
      } else if (pencil_cubic_discriminant(p).is_zero()) {
        continue;
      }
      return {std::move(p), degeneration, s, t};
    } catch (const DomainError&) {
      continue;  // common factor or zero pencil; draw again
    }
  }
  throw InvariantViolation("could not draw a valid random pencil");
}

}  // namespace heights::gen
