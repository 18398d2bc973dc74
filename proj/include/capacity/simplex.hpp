// Copyright 2026 The capacity Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CAPACITY_SIMPLEX_HPP
#define CAPACITY_SIMPLEX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "capacity/error.hpp"
#include "capacity/rational.hpp"

namespace capacity {

enum class Relation { less_equal, greater_equal, equal };

struct Constraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::less_equal;
  Rational rhs;
};

/// Per-variable bounds; a missing side is unbounded.
struct VariableBound {
  std::optional<Rational> lower;
  std::optional<Rational> upper;

  static VariableBound free() { return {}; }
  static VariableBound non_negative() { return {Rational(0), std::nullopt}; }
};

/// maximize objective . x + objective_constant subject to constraints and bounds.
/// Variables without an entry in `bounds` are free.
struct LinearProgram {
  std::vector<Rational> objective;
  Rational objective_constant = 0;
  std::vector<Constraint> constraints;
  std::vector<VariableBound> bounds;

  std::size_t variables() const { return objective.size(); }

  VariableBound bound(std::size_t j) const { return j < bounds.size() ? bounds[j] : VariableBound{}; }

  void validate() const {
    if (bounds.size() > objective.size()) throw dimension_mismatch("more bounds than variables");
    for (std::size_t i = 0; i < constraints.size(); ++i)
      if (constraints[i].coeffs.size() != objective.size())
        throw dimension_mismatch("constraint " + std::to_string(i) + " has " +
                                 std::to_string(constraints[i].coeffs.size()) + " coefficients, expected " +
                                 std::to_string(objective.size()));
    for (std::size_t j = 0; j < bounds.size(); ++j)
      if (bounds[j].lower && bounds[j].upper && *bounds[j].lower > *bounds[j].upper)
        throw precondition_error("variable " + std::to_string(j) + " has empty bound interval");
  }
};

enum class LpStatus { optimal, unbounded, infeasible };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::unbounded: return "unbounded";
    case LpStatus::infeasible: return "infeasible";
  }
  return "?";
}

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> assignment;
  /// One multiplier per constraint; variable-bound multipliers are implied by
  /// the reduced costs.
  std::vector<Rational> dual;
};

namespace detail {

// x_j = offset + sign * y[first] (one internal column) or y[first] - y[first+1] (free split).
struct VariableMap {
  Rational offset;
  int sign = 1;
  std::size_t first = 0;
  bool split = false;
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), t_(rows, std::vector<Rational>(cols + 1)) {}

  Rational& at(std::size_t i, std::size_t j) { return t_[i][j]; }
  Rational& rhs(std::size_t i) { return t_[i][cols_]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::vector<std::size_t> basis;
  std::vector<bool> barred;  // columns that may not enter
  std::vector<Rational> reduced;
  Rational value;

  void price(const std::vector<Rational>& cost) {
    reduced.assign(cols_, Rational(0));
    value = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      const auto& cb = cost[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        if (t_[i][j] != 0) reduced[j] += cb * t_[i][j];
      value += cb * t_[i][cols_];
    }
    for (std::size_t j = 0; j < cols_; ++j) reduced[j] -= cost[j];
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / t_[r][c];
    for (auto& x : t_[r])
      if (x != 0) x *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || t_[i][c] == 0) continue;
      Rational f = t_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
    }
    if (reduced[c] != 0) {
      Rational f = reduced[c];
      for (std::size_t j = 0; j < cols_; ++j)
        if (t_[r][j] != 0) reduced[j] -= f * t_[r][j];
      value -= f * t_[r][cols_];
    }
    basis[r] = c;
  }

  /// Bland's rule iterations; returns false if unbounded.
  bool optimize() {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j)
        if (!barred[j] && reduced[j] < 0) {
          enter = j;
          break;
        }
      if (enter == cols_) return true;
      std::size_t leave = rows_;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][enter];
        if (leave == rows_ || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows_) return false;
      pivot(leave, enter);
    }
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<Rational>> t_;
};

}  // namespace detail

/// Exact two-phase primal simplex on a dense rational tableau, Bland's rule.
inline LpSolution simplex_solve(const LinearProgram& lp) {
  lp.validate();
  const std::size_t nvars = lp.variables();

  // Rewrite variables as non-negative internal columns.
  std::vector<detail::VariableMap> maps(nvars);
  std::size_t ny = 0;
  struct BoundRow {
    std::size_t column;
    Rational limit;
  };
  std::vector<BoundRow> bound_rows;
  for (std::size_t j = 0; j < nvars; ++j) {
    auto b = lp.bound(j);
    auto& m = maps[j];
    m.first = ny;
    if (b.lower) {
      m.offset = *b.lower;
      ny += 1;
      if (b.upper) bound_rows.push_back({m.first, *b.upper - *b.lower});
    } else if (b.upper) {
      m.offset = *b.upper;
      m.sign = -1;
      ny += 1;
    } else {
      m.split = true;
      ny += 2;
    }
  }

  struct Row {
    std::vector<Rational> a;
    Relation rel;
    Rational b;
    bool flipped = false;
  };
  std::vector<Row> rows;
  for (const auto& c : lp.constraints) {
    Row r{std::vector<Rational>(ny), c.relation, c.rhs};
    for (std::size_t j = 0; j < nvars; ++j) {
      const auto& coef = c.coeffs[j];
      if (coef == 0) continue;
      const auto& m = maps[j];
      r.b -= coef * m.offset;
      if (m.split) {
        r.a[m.first] += coef;
        r.a[m.first + 1] -= coef;
      } else {
        r.a[m.first] += coef * m.sign;
      }
    }
    rows.push_back(std::move(r));
  }
  for (const auto& br : bound_rows) {
    Row r{std::vector<Rational>(ny), Relation::less_equal, br.limit};
    r.a[br.column] = 1;
    rows.push_back(std::move(r));
  }
  for (auto& r : rows) {
    if (r.b < 0) {
      for (auto& x : r.a) x = -x;
      r.b = -r.b;
      r.flipped = true;
      if (r.rel == Relation::less_equal)
        r.rel = Relation::greater_equal;
      else if (r.rel == Relation::greater_equal)
        r.rel = Relation::less_equal;
    }
  }

  const std::size_t m = rows.size();
  std::size_t nslack = 0, nart = 0;
  for (const auto& r : rows) {
    if (r.rel != Relation::equal) ++nslack;
    if (r.rel != Relation::less_equal) ++nart;
  }
  const std::size_t ncols = ny + nslack + nart;
  detail::Tableau tab(m, ncols);
  tab.basis.assign(m, 0);
  tab.barred.assign(ncols, false);
  std::vector<std::size_t> identity_col(m);
  std::vector<bool> artificial(ncols, false);
  {
    std::size_t s = ny, a = ny + nslack;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < ny; ++j) tab.at(i, j) = rows[i].a[j];
      tab.rhs(i) = rows[i].b;
      switch (rows[i].rel) {
        case Relation::less_equal:
          tab.at(i, s) = 1;
          identity_col[i] = s;
          tab.basis[i] = s++;
          break;
        case Relation::greater_equal:
          tab.at(i, s++) = -1;
          [[fallthrough]];
        case Relation::equal:
          tab.at(i, a) = 1;
          artificial[a] = true;
          identity_col[i] = a;
          tab.basis[i] = a++;
          break;
      }
    }
  }

  LpSolution sol;
  if (nart > 0) {
    std::vector<Rational> cost(ncols);
    for (std::size_t j = 0; j < ncols; ++j)
      if (artificial[j]) cost[j] = -1;
    tab.price(cost);
    tab.optimize();  // bounded above by zero
    if (tab.value < 0) {
      sol.status = LpStatus::infeasible;
      return sol;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (!artificial[tab.basis[i]]) continue;
      for (std::size_t j = 0; j < ncols; ++j)
        if (!artificial[j] && tab.at(i, j) != 0) {
          tab.pivot(i, j);
          break;
        }
    }
    for (std::size_t j = 0; j < ncols; ++j) tab.barred[j] = artificial[j];
  }

  std::vector<Rational> cost(ncols);
  for (std::size_t j = 0; j < nvars; ++j) {
    const auto& mp = maps[j];
    const auto& c = lp.objective[j];
    if (mp.split) {
      cost[mp.first] += c;
      cost[mp.first + 1] -= c;
    } else {
      cost[mp.first] += c * mp.sign;
    }
  }
  tab.price(cost);
  if (!tab.optimize()) {
    sol.status = LpStatus::unbounded;
    return sol;
  }

  std::vector<Rational> y(ncols);
  for (std::size_t i = 0; i < m; ++i) y[tab.basis[i]] = tab.rhs(i);
  sol.status = LpStatus::optimal;
  sol.assignment.resize(nvars);
  for (std::size_t j = 0; j < nvars; ++j) {
    const auto& mp = maps[j];
    sol.assignment[j] = mp.split ? y[mp.first] - y[mp.first + 1] : mp.offset + mp.sign * y[mp.first];
  }
  sol.value = lp.objective_constant;
  for (std::size_t j = 0; j < nvars; ++j) sol.value += lp.objective[j] * sol.assignment[j];
  sol.dual.resize(lp.constraints.size());
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    Rational d = tab.reduced[identity_col[i]];
    sol.dual[i] = rows[i].flipped ? Rational(-d) : d;
  }
  return sol;
}

/// Exact check of an optimal solution: primal feasibility, objective value,
/// and (when duals are present) dual feasibility with equal dual objective.
inline Verdict check_solution(const LinearProgram& lp, const LpSolution& sol) {
  lp.validate();
  if (sol.status != LpStatus::optimal) return Verdict::fail(std::string("status is ") + to_string(sol.status));
  const std::size_t n = lp.variables();
  if (sol.assignment.size() != n)
    throw dimension_mismatch("assignment has " + std::to_string(sol.assignment.size()) + " entries, expected " +
                             std::to_string(n));
  if (!sol.dual.empty() && sol.dual.size() != lp.constraints.size())
    throw dimension_mismatch("dual has " + std::to_string(sol.dual.size()) + " entries, expected " +
                             std::to_string(lp.constraints.size()));
  const auto& x = sol.assignment;
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const auto& c = lp.constraints[i];
    Rational lhs = 0;
    for (std::size_t j = 0; j < n; ++j) lhs += c.coeffs[j] * x[j];
    bool ok = c.relation == Relation::less_equal      ? lhs <= c.rhs
              : c.relation == Relation::greater_equal ? lhs >= c.rhs
                                                      : lhs == c.rhs;
    if (!ok) return Verdict::fail("constraint " + std::to_string(i) + " violated");
  }
  for (std::size_t j = 0; j < n; ++j) {
    auto b = lp.bound(j);
    if ((b.lower && x[j] < *b.lower) || (b.upper && x[j] > *b.upper))
      return Verdict::fail("bound of variable " + std::to_string(j) + " violated");
  }
  Rational primal = lp.objective_constant;
  for (std::size_t j = 0; j < n; ++j) primal += lp.objective[j] * x[j];
  if (primal != sol.value) return Verdict::fail("reported value does not match assignment");
  if (sol.dual.empty()) return Verdict::pass();

  Rational dual_obj = lp.objective_constant;
  std::vector<Rational> reduced = lp.objective;
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const auto& c = lp.constraints[i];
    const auto& yi = sol.dual[i];
    if ((c.relation == Relation::less_equal && yi < 0) || (c.relation == Relation::greater_equal && yi > 0))
      return Verdict::fail("dual multiplier " + std::to_string(i) + " has the wrong sign");
    dual_obj += yi * c.rhs;
    for (std::size_t j = 0; j < n; ++j) reduced[j] -= yi * c.coeffs[j];
  }
  for (std::size_t j = 0; j < n; ++j) {
    auto b = lp.bound(j);
    if (reduced[j] > 0) {
      if (!b.upper) return Verdict::fail("dual infeasible at variable " + std::to_string(j));
      dual_obj += reduced[j] * *b.upper;
    } else if (reduced[j] < 0) {
      if (!b.lower) return Verdict::fail("dual infeasible at variable " + std::to_string(j));
      dual_obj += reduced[j] * *b.lower;
    }
  }
  if (dual_obj != primal)
    return Verdict::fail("dual objective " + to_string(dual_obj) + " differs from primal " + to_string(primal));
  return Verdict::pass();
}

}  // namespace capacity

#endif  // CAPACITY_SIMPLEX_HPP
