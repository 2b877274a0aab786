#include "heights/exact_lp.hpp"

#include <optional>

#include "heights/error.hpp"

namespace heights::lp {

namespace {

// Tableau rows: constraint rows followed by the objective row. The last
// column holds the right-hand side. The objective row stores reduced costs
// for a maximization: entering columns have a negative entry.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : t_(rows + 1, std::vector<Rational>(cols + 1)), basis_(rows), rows_(rows), cols_(cols) {}

  Rational& at(std::size_t r, std::size_t c) { return t_[r][c]; }
  Rational& rhs(std::size_t r) { return t_[r][cols_]; }
  Rational& cost(std::size_t c) { return t_[rows_][c]; }
  Rational& value() { return t_[rows_][cols_]; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const Rational inv = t_[pr][pc].inverse();
    for (auto& x : t_[pr]) {
      if (!x.is_zero()) x *= inv;
    }
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr || t_[r][pc].is_zero()) continue;
      const Rational factor = t_[r][pc];
      for (std::size_t c = 0; c <= cols_; ++c) {
        if (!t_[pr][c].is_zero()) t_[r][c] -= factor * t_[pr][c];
      }
    }
    basis_[pr] = pc;
  }

  // Runs simplex iterations over columns [0, active). Returns false when
  // the objective is unbounded.
  bool optimize(std::size_t active) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t c = 0; c < active; ++c) {
        if (t_[rows_][c].sign() < 0) {
          enter = c;
          break;
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (t_[r][*enter].sign() <= 0) continue;
        const Rational ratio = t_[r][cols_] / t_[r][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  std::size_t rows() const { return rows_; }

 private:
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
  std::size_t rows_;
  std::size_t cols_;
};

}  // namespace

Solution solve(const Problem& problem) {
  const std::size_t m = problem.a.size();
  if (problem.b.size() != m) throw DomainError("LP: row count mismatch");
  const std::size_t n = m == 0 ? problem.objective.size() : problem.a.front().size();
  for (const auto& row : problem.a) {
    if (row.size() != n) throw DomainError("LP: ragged constraint matrix");
  }
  if (!problem.objective.empty() && problem.objective.size() != n) {
    throw DomainError("LP: objective length mismatch");
  }

  // Columns: n structural variables, then m artificials.
  Tableau tab(m, n + m);
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = problem.b[r].sign() < 0;
    for (std::size_t c = 0; c < n; ++c) tab.at(r, c) = flip ? -problem.a[r][c] : problem.a[r][c];
    tab.rhs(r) = flip ? -problem.b[r] : problem.b[r];
    tab.at(r, n + r) = 1;
    tab.basis()[r] = n + r;
  }
  // Phase I: maximize -(sum of artificials). Reduced costs after pricing out
  // the artificial basis are minus the column sums.
  for (std::size_t c = 0; c < n; ++c) {
    Rational s;
    for (std::size_t r = 0; r < m; ++r) s += tab.at(r, c);
    tab.cost(c) = -s;
  }
  {
    Rational s;
    for (std::size_t r = 0; r < m; ++r) s += tab.rhs(r);
    tab.value() = -s;
  }
  tab.optimize(n + m);
  Solution sol;
  if (!tab.value().is_zero()) {
    sol.status = Status::Infeasible;
    return sol;
  }
  // Drive remaining (zero-valued) artificials out of the basis.
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis()[r] < n) continue;
    for (std::size_t c = 0; c < n; ++c) {
      if (!tab.at(r, c).is_zero()) {
        tab.pivot(r, c);
        break;
      }
    }
  }
  // Phase II objective: reduced costs -c_j + c_B B^{-1} A_j. Artificial
  // columns are frozen out by only optimizing over [0, n).
  for (std::size_t c = 0; c <= n + m; ++c) {
    if (c < n + m) tab.cost(c) = Rational{};
  }
  tab.value() = Rational{};
  if (!problem.objective.empty()) {
    for (std::size_t c = 0; c < n; ++c) tab.cost(c) = -problem.objective[c];
    for (std::size_t r = 0; r < m; ++r) {
      const std::size_t bc = tab.basis()[r];
      if (bc >= n || problem.objective[bc].is_zero()) continue;
      const Rational cb = problem.objective[bc];
      for (std::size_t c = 0; c < n + m; ++c) {
        if (!tab.at(r, c).is_zero()) tab.cost(c) += cb * tab.at(r, c);
      }
      tab.value() += cb * tab.rhs(r);
    }
    if (!tab.optimize(n)) {
      sol.status = Status::Unbounded;
      return sol;
    }
  }
  sol.status = Status::Optimal;
  sol.x.assign(n, Rational{});
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis()[r] < n) sol.x[tab.basis()[r]] = tab.rhs(r);
  }
  sol.value = tab.value();
  return sol;
}

}  // namespace heights::lp
