#include "oracles.hpp"

#include <functional>

namespace heights::oracle {

std::vector<Exponent> monomials(int n, int d) {
  std::vector<Exponent> out;
  Exponent e(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, d);
  return out;
}

std::vector<std::vector<int>> bounded_weights(int n, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(n, 0);
  std::function<void(int, int)> rec = [&](int i, int sum) {
    if (i == n - 1) {
      const int last = -sum;
      if (last < -bound || last > bound) return;
      a[i] = last;
      bool zero = true;
      for (int x : a) zero = zero && x == 0;
      if (!zero) out.push_back(a);
      return;
    }
    for (int x = -bound; x <= bound; ++x) {
      a[i] = x;
      rec(i + 1, sum + x);
    }
  };
  rec(0, 0);
  return out;
}

namespace {

long pairing(const std::vector<int>& a, const Exponent& m) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * m[i];
  return s;
}

// Marks every subset of a marked mask.
void close_downward(std::vector<std::uint8_t>& f, int bits) {
  for (int b = 0; b < bits; ++b) {
    const std::uint32_t bit = 1u << b;
    for (std::uint32_t mask = 0; mask < f.size(); ++mask) {
      if ((mask & bit) && f[mask]) f[mask ^ bit] = 1;
    }
  }
}

}  // namespace

std::vector<TorusClass> enumerate_all_supports(const std::vector<Exponent>& monos,
                                               const std::vector<std::vector<int>>& weights) {
  const int bits = static_cast<int>(monos.size());
  const std::size_t total = std::size_t{1} << bits;
  std::vector<std::uint8_t> positive(total, 0), nonnegative(total, 0);
  for (const auto& a : weights) {
    std::uint32_t p = 0, q = 0;
    for (int i = 0; i < bits; ++i) {
      const long v = pairing(a, monos[i]);
      if (v > 0) p |= 1u << i;
      if (v >= 0) q |= 1u << i;
    }
    positive[p] = 1;
    nonnegative[q] = 1;
  }
  close_downward(positive, bits);
  close_downward(nonnegative, bits);
  std::vector<TorusClass> out(total, TorusClass::Stable);
  for (std::size_t mask = 1; mask < total; ++mask) {
    if (positive[mask]) out[mask] = TorusClass::Unstable;
    else if (nonnegative[mask]) out[mask] = TorusClass::Semistable;
  }
  return out;
}

TorusClass classify_support(const std::vector<Exponent>& support,
                            const std::vector<std::vector<int>>& weights) {
  bool semistable_witness = false;
  for (const auto& a : weights) {
    long lo = pairing(a, support.front());
    for (const auto& m : support) lo = std::min(lo, pairing(a, m));
    if (lo > 0) return TorusClass::Unstable;
    if (lo == 0) semistable_witness = true;
  }
  return semistable_witness ? TorusClass::Semistable : TorusClass::Stable;
}

Rational discriminant_by_resultant(const UniPoly& f) {
  const int n = f.degree();
  const Rational r = resultant_binary(f, f.derivative()) / f.leading();
  return (n * (n - 1) / 2) % 2 == 0 ? r : -r;
}

Rational binary_discriminant(const std::vector<Rational>& coefficients) {
  return discriminant_by_resultant(UniPoly(coefficients));
}

}  // namespace heights::oracle
