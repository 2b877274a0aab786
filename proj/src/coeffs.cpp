#include "heights/coeffs.hpp"

#include <algorithm>
#include <string>

#include "heights/error.hpp"

namespace heights::coeffs {

namespace {

void require_twelfths(const Rational& value, const char* what) {
  if (!(value * Rational(12)).is_integer()) {
    throw InvariantViolation(std::string(what) + " = " + value.str() + " is not in (1/12)Z");
  }
}

void require_positive(int value, const char* name) {
  if (value < 1) throw DomainError(std::string(name) + " must be at least 1", name);
}

Rational sign_power(int N) { return N % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

Rational f_stab(int d, int N) {
  require_positive(N, "N");
  require_positive(d, "d");
  const Rational dd(d);
  const Rational nn(N);
  const Rational lead = (nn + 1) / (Rational(24) * dd * dd);
  const Rational p = (dd - 1).pow(N);
  Rational bracket;
  if (N % 2 == 1) {
    bracket = p * (dd * dd * nn - dd * dd - 2 * dd * nn - 2) + 2 * (dd * dd - 1);
  } else {
    bracket = p * (dd * dd * nn + 2 * dd * dd - 2 * dd * nn - 2) - 2 * (dd * dd - 1);
  }
  Rational value = lead * bracket;
  require_twelfths(value, "F_stab");
  return value;
}

Rational w(int N, int delta) {
  require_positive(N, "N");
  require_positive(delta, "delta");
  const Rational dl(delta);
  const Rational nn(N);
  const Rational bracket = (nn * dl + 1) * (dl - 1).pow(N - 1) + sign_power(N) * (dl + 1);
  Rational value = (dl - 1) * bracket / (Rational(12) * dl * dl);
  require_twelfths(value, "w");
  return value;
}

Rational g(int N, int delta) {
  require_positive(N, "N");
  if (delta < 2) throw DomainError("g(N, delta) requires delta >= 2", "delta");
  return Rational(12) * w(N, delta) / Rational(delta - 1).pow(N);
}

Rational g_at_two(int N) {
  require_positive(N, "N");
  return (Rational(2 * N + 1) + 3 * sign_power(N)) / Rational(4);
}

Rational f_from_w(int d, int N) {
  require_positive(N, "N");
  if (d < 2) throw DomainError("the identity is stated for d >= 2", "d");
  const Rational n1(N + 1);
  return -n1 * w(N, d) +
         n1 * Rational(d - 1).pow(N) * (Rational(2 * N + 1) + 3 * sign_power(N)) / Rational(48);
}

bool check_f_equals_fstab(int d, int N) { return f_from_w(d, N) == f_stab(d, N); }

bool classify_equality_case(int N, std::span<const int> multiplicities) {
  require_positive(N, "N");
  for (int m : multiplicities) {
    if (m < 2) throw DomainError("singular point multiplicities are at least 2", "multiplicities");
  }
  auto all = [&](auto pred) { return std::all_of(multiplicities.begin(), multiplicities.end(), pred); };
  if (N == 1) return true;
  if (N == 3) return all([](int m) { return m == 2 || m == 3; });
  return all([](int m) { return m == 2; });
}

}  // namespace heights::coeffs
