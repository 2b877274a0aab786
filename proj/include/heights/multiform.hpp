#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "heights/error.hpp"
#include "heights/rational.hpp"

namespace heights {

using Exponent = std::vector<int>;

/// Homogeneous form of degree d in N+1 variables X_0..X_N with coefficients
/// in a commutative ring R (Rational, or HomPoly2 for pencils). Terms are a
/// sparse exponent-vector map; zero coefficients are never stored.
template <class R>
class MultiForm {
 public:
  MultiForm(int num_vars, int degree) : num_vars_(num_vars), degree_(degree) {
    if (num_vars < 2) throw DomainError("a form needs at least two variables", "numVars");
    if (degree < 1) throw DomainError("form degree must be at least 1", "degree");
  }

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  const std::map<Exponent, R>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * X^e, merging with an existing term.
  void add_term(const Exponent& e, const R& c) {
    check_exponent(e);
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  /// Coefficient of X^e or `zero` when absent.
  R coefficient_or(const Exponent& e, const R& zero) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? zero : it->second;
  }

  std::vector<Exponent> support() const {
    std::vector<Exponent> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
  }

  /// Renames variables: X_i becomes X_{perm[i]}.
  MultiForm permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != num_vars_) {
      throw DomainError("permutation length must equal the number of variables");
    }
    MultiForm out(num_vars_, degree_);
    for (const auto& [e, c] : terms_) {
      Exponent f(num_vars_);
      for (int i = 0; i < num_vars_; ++i) f[perm[i]] = e[i];
      out.add_term(f, c);
    }
    return out;
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    MultiForm<S> out(num_vars_, degree_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  friend bool operator==(const MultiForm&, const MultiForm&) = default;

 private:
  void check_exponent(const Exponent& e) const {
    if (static_cast<int>(e.size()) != num_vars_) {
      throw DomainError("exponent vector has wrong length", "terms");
    }
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) {
      throw DomainError("negative exponent", "terms");
    }
    if (std::accumulate(e.begin(), e.end(), 0) != degree_) {
      throw DomainError("exponent vector does not sum to the form degree", "terms");
    }
  }

  int num_vars_;
  int degree_;
  std::map<Exponent, R> terms_;
};

/// Coefficients c_j of a binary form sum_j c_j X0^j X1^(d-j), indexed by j.
template <class R>
std::vector<R> binary_coefficients(const MultiForm<R>& f, const R& zero) {
  if (f.num_vars() != 2) throw DomainError("expected a binary form", "numVars");
  std::vector<R> out(f.degree() + 1, zero);
  for (const auto& [e, c] : f.terms()) out[e[0]] = c;
  return out;
}

template <class R>
MultiForm<R> binary_form(std::span<const R> coefficients) {
  const int d = static_cast<int>(coefficients.size()) - 1;
  MultiForm<R> f(2, d);
  for (int j = 0; j <= d; ++j) f.add_term({j, d - j}, coefficients[j]);
  return f;
}

/// 2x2 matrix acting on binary forms by X0 -> a X0 + b X1, X1 -> c X0 + e X1.
struct LinearSubstitution {
  Rational a, b, c, e;
  Rational det() const { return a * e - b * c; }
};

/// F composed with the substitution (rational coefficients only).
MultiForm<Rational> substitute(const MultiForm<Rational>& f, const LinearSubstitution& g);

std::string to_string(const MultiForm<Rational>& f);

}  // namespace heights
