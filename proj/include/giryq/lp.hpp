#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "giryq/error.hpp"
#include "giryq/rational.hpp"

namespace giryq {

enum class Sense { minimize, maximize };
enum class LpStatus { optimal, infeasible, unbounded };

constexpr std::string_view to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "OPTIMAL";
    case LpStatus::infeasible: return "INFEASIBLE";
    case LpStatus::unbounded: return "UNBOUNDED";
  }
  return "?";
}

/// optimize objective . p  subject to  constraints p = rhs,  p >= 0.
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> constraints;
  std::vector<Rational> rhs;
  Sense sense = Sense::minimize;
};

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;             // meaningful when optimal
  std::vector<Rational> point;  // a basic optimal solution when optimal
  std::size_t pivots = 0;     // both phases
};

namespace detail {

/// Dense tableau in canonical form with respect to `basis`: the basic
/// columns form an identity, and `rhs` holds the basic variable values.
class Tableau {
 public:
  Tableau(std::size_t columns, std::vector<std::vector<Rational>> rows,
          std::vector<Rational> rhs, std::vector<std::size_t> basis)
      : columns_(columns), rows_(std::move(rows)), rhs_(std::move(rhs)),
        basis_(std::move(basis)) {}

  std::size_t row_count() const noexcept { return rows_.size(); }
  const std::vector<std::size_t>& basis() const noexcept { return basis_; }
  const Rational& entry(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const Rational& rhs(std::size_t i) const { return rhs_[i]; }

  void pivot(std::size_t r, std::size_t col) {
    const Rational p = rows_[r][col];
    for (auto& v : rows_[r]) v /= p;
    rhs_[r] /= p;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r) continue;
      const Rational factor = rows_[i][col];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        if (rows_[r][j] != 0) rows_[i][j] -= factor * rows_[r][j];
      }
      rhs_[i] -= factor * rhs_[r];
    }
    basis_[r] = col;
  }

  void erase_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) v += cost[basis_[i]] * rhs_[i];
    return v;
  }

  /// Minimizes `cost` over the first `columns` columns using Bland's rule:
  /// the lowest-index improving column enters, and ratio-test ties leave by
  /// lowest basic variable index. Returns false if unbounded.
  bool minimize(const std::vector<Rational>& cost, std::size_t columns, std::size_t& pivots) {
    for (;;) {
      std::vector<char> in_basis(columns_, 0);
      for (auto b : basis_) in_basis[b] = 1;

      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < columns && !entering; ++j) {
        if (in_basis[j]) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
          if (rows_[i][j] != 0) reduced -= cost[basis_[i]] * rows_[i][j];
        }
        if (reduced < 0) entering = j;
      }
      if (!entering) return true;

      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][*entering];
        if (a <= 0) continue;
        const Rational ratio = rhs_[i] / a;
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
      ++pivots;
    }
  }

 private:
  std::size_t columns_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Exact two-phase primal simplex for equality-form programs.
///
/// Phase 1 starts from an all-artificial basis and minimizes the sum of the
/// artificials; a positive optimum proves infeasibility. Artificials left in
/// the basis at level zero are pivoted out, or their row is dropped when it
/// is a linear combination of the others. Phase 2 then optimizes the real
/// objective over the original columns only. Bland's rule in both phases
/// rules out cycling, so the returned vertex is deterministic.
inline LpSolution lp_solve(const LinearProgram& lp) {
  const std::size_t n = lp.objective.size();
  const std::size_t m = lp.constraints.size();
  if (lp.rhs.size() != m) {
    throw Error(ErrorKind::dimension_mismatch,
                std::to_string(m) + " constraint rows but " + std::to_string(lp.rhs.size()) +
                    " right-hand sides");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.constraints[i].size() != n) {
      throw Error(ErrorKind::dimension_mismatch,
                  "constraint row " + std::to_string(i) + " has " +
                      std::to_string(lp.constraints[i].size()) + " columns, expected " +
                      std::to_string(n));
    }
  }

  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(n + m, Rational(0)));
  std::vector<Rational> rhs(m);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = lp.rhs[i] < 0;
    for (std::size_t j = 0; j < n; ++j) {
      rows[i][j] = flip ? Rational(-lp.constraints[i][j]) : lp.constraints[i][j];
    }
    rows[i][n + i] = 1;
    rhs[i] = flip ? Rational(-lp.rhs[i]) : lp.rhs[i];
    basis[i] = n + i;
  }
  detail::Tableau tableau(n + m, std::move(rows), std::move(rhs), std::move(basis));

  LpSolution solution;
  std::vector<Rational> phase1_cost(n + m, Rational(0));
  for (std::size_t j = n; j < n + m; ++j) phase1_cost[j] = 1;
  // Phase 1 is bounded below by zero, so it always terminates optimal.
  tableau.minimize(phase1_cost, n + m, solution.pivots);
  if (tableau.objective(phase1_cost) != 0) {
    solution.status = LpStatus::infeasible;
    return solution;
  }

  for (std::size_t i = 0; i < tableau.row_count();) {
    if (tableau.basis()[i] < n) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n && !col; ++j) {
      if (tableau.entry(i, j) != 0) col = j;
    }
    if (col) {
      tableau.pivot(i, *col);
      ++solution.pivots;
      ++i;
    } else {
      tableau.erase_row(i);
    }
  }

  std::vector<Rational> cost(n + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = lp.sense == Sense::maximize ? Rational(-lp.objective[j]) : lp.objective[j];
  }
  if (!tableau.minimize(cost, n, solution.pivots)) {
    solution.status = LpStatus::unbounded;
    return solution;
  }

  solution.status = LpStatus::optimal;
  solution.point.assign(n, Rational(0));
  for (std::size_t i = 0; i < tableau.row_count(); ++i) {
    solution.point[tableau.basis()[i]] = tableau.rhs(i);
  }
  solution.value = 0;
  for (std::size_t j = 0; j < n; ++j) solution.value += lp.objective[j] * solution.point[j];
  return solution;
}

}  // namespace giryq
