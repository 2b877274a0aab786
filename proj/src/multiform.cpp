#include "heights/multiform.hpp"

#include <sstream>

namespace heights {

namespace {

// Coefficients of (p X0 + q X1)^n as a dense vector indexed by the X0 power.
std::vector<Rational> linear_power(const Rational& p, const Rational& q, int n) {
  std::vector<Rational> out(n + 1);
  BigInt binom = 1;
  for (int k = 0; k <= n; ++k) {
    out[k] = Rational(binom) * p.pow(k) * q.pow(n - k);
    binom = binom * (n - k) / (k + 1);
  }
  return out;
}

}  // namespace

MultiForm<Rational> substitute(const MultiForm<Rational>& f, const LinearSubstitution& g) {
  if (f.num_vars() != 2) throw DomainError("linear substitution is implemented for binary forms");
  const int d = f.degree();
  std::vector<Rational> out(d + 1);
  for (const auto& [e, c] : f.terms()) {
    const auto x0 = linear_power(g.a, g.b, e[0]);
    const auto x1 = linear_power(g.c, g.e, e[1]);
    for (std::size_t i = 0; i < x0.size(); ++i) {
      if (x0[i].is_zero()) continue;
      for (std::size_t j = 0; j < x1.size(); ++j) out[i + j] += c * x0[i] * x1[j];
    }
  }
  return binary_form<Rational>(out);
}

std::string to_string(const MultiForm<Rational>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational mag = c.abs();
    bool wrote = false;
    if (mag != Rational(1)) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << "X" << i;
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
    if (!wrote) os << "1";
  }
  return os.str();
}

}  // namespace heights
