#ifndef SGKIT_LP_HPP
#define SGKIT_LP_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "sgkit/common.hpp"

namespace sgkit {

enum class Rel { le, eq, ge };
enum class Sense { minimize, maximize };
enum class LpStatus { optimal, infeasible, unbounded };

/// Dense linear program. Variables carry box bounds (+-inf allowed).
struct LinearProgram {
  Sense sense = Sense::maximize;
  std::vector<double> objective;
  struct Row {
    std::vector<double> coeffs;
    Rel rel = Rel::le;
    double rhs = 0.0;
  };
  std::vector<Row> rows;
  std::vector<double> lower;
  std::vector<double> upper;

  int add_var(double lo = 0.0, double hi = kInf, double obj = 0.0) {
    objective.push_back(obj);
    lower.push_back(lo);
    upper.push_back(hi);
    return static_cast<int>(objective.size()) - 1;
  }

  void add_row(std::vector<double> coeffs, Rel rel, double rhs) {
    if (coeffs.size() != objective.size())
      throw std::invalid_argument("lp: row dimension mismatch");
    rows.push_back({std::move(coeffs), rel, rhs});
  }

  std::size_t num_vars() const { return objective.size(); }

  void validate() const {
    if (lower.size() != objective.size() || upper.size() != objective.size())
      throw std::invalid_argument("lp: bound dimension mismatch");
    for (const auto& r : rows)
      if (r.coeffs.size() != objective.size())
        throw std::invalid_argument("lp: row dimension mismatch");
    for (std::size_t j = 0; j < objective.size(); ++j)
      if (lower[j] > upper[j]) throw std::invalid_argument("lp: lower bound exceeds upper");
  }
};

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  double value = 0.0;
  std::vector<double> x;
};

namespace lpdetail {

constexpr double kPivotEps = 1e-9;
constexpr double kFeasEps = 1e-7;

/// Two-phase tableau simplex on min c.x s.t. Ax = b, x >= 0, b >= 0.
/// Pivot choice is Dantzig (most negative reduced cost) until the
/// objective stalls, then Bland's rule, which cannot cycle.
class Simplex {
 public:
  Simplex(std::vector<std::vector<double>> A, std::vector<double> b, std::vector<double> c,
          std::size_t num_artificials)
      : m_(A.size()), n_(A.empty() ? 0 : A[0].size()), art_begin_(n_ - num_artificials) {
    tab_.assign(m_ + 1, std::vector<double>(n_ + 1, 0.0));
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) tab_[i][j] = A[i][j];
      tab_[i][n_] = b[i];
    }
    cost_ = std::move(c);
  }

  // Basis must be a valid identity-ish starting basis (slacks/artificials).
  LpStatus run(std::vector<int> basis, std::vector<double>* x_out, double* value_out) {
    basis_ = std::move(basis);

    if (art_begin_ < n_) {
      // Phase 1: minimize the artificial sum.
      std::vector<double> phase1(n_, 0.0);
      for (std::size_t j = art_begin_; j < n_; ++j) phase1[j] = 1.0;
      set_objective(phase1);
      if (!iterate()) return LpStatus::unbounded;  // cannot happen: phase 1 bounded below
      if (objective_value() > kFeasEps) return LpStatus::infeasible;
      purge_artificials();
    }

    set_objective(cost_);
    if (!iterate()) return LpStatus::unbounded;

    x_out->assign(n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] >= 0) (*x_out)[basis_[i]] = tab_[i][n_];
    *value_out = objective_value();
    return LpStatus::optimal;
  }

 private:
  void set_objective(const std::vector<double>& c) {
    for (std::size_t j = 0; j <= n_; ++j) tab_[m_][j] = 0.0;
    for (std::size_t j = 0; j < n_; ++j) tab_[m_][j] = c[j];
    // Price out the current basis.
    for (std::size_t i = 0; i < m_; ++i) {
      int bj = basis_[i];
      if (bj < 0) continue;
      double cb = c[bj];
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j <= n_; ++j) tab_[m_][j] -= cb * tab_[i][j];
    }
  }

  double objective_value() const { return -tab_[m_][n_]; }

  bool column_blocked(std::size_t j) const {
    // Artificials stay out of the basis once phase 1 ends.
    return phase2_ && j >= art_begin_;
  }

  // Returns false on unboundedness.
  bool iterate() {
    phase2_ = started_phase2_;
    long stall = 0;
    double last_obj = objective_value();
    bool bland = false;
    const long stall_limit = static_cast<long>(2 * (n_ + m_)) + 16;
    while (true) {
      int enter = -1;
      if (!bland) {
        double best = -kPivotEps;
        for (std::size_t j = 0; j < n_; ++j) {
          if (column_blocked(j)) continue;
          if (tab_[m_][j] < best) {
            best = tab_[m_][j];
            enter = static_cast<int>(j);
          }
        }
      } else {
        for (std::size_t j = 0; j < n_; ++j) {
          if (column_blocked(j)) continue;
          if (tab_[m_][j] < -kPivotEps) {
            enter = static_cast<int>(j);
            break;
          }
        }
      }
      if (enter < 0) return true;  // optimal

      int leave = -1;
      double best_ratio = kInf;
      for (std::size_t i = 0; i < m_; ++i) {
        double a = tab_[i][enter];
        if (a > kPivotEps) {
          double ratio = tab_[i][n_] / a;
          if (ratio < best_ratio - 1e-12 ||
              (ratio < best_ratio + 1e-12 &&
               (leave < 0 || basis_[i] < basis_[leave]))) {
            best_ratio = ratio;
            leave = static_cast<int>(i);
          }
        }
      }
      if (leave < 0) return false;  // unbounded

      pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(enter));

      double obj = objective_value();
      if (obj < last_obj - 1e-12) {
        last_obj = obj;
        stall = 0;
      } else if (++stall > stall_limit) {
        bland = true;
      }
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    double p = tab_[row][col];
    for (std::size_t j = 0; j <= n_; ++j) tab_[row][j] /= p;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == row) continue;
      double f = tab_[i][col];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= n_; ++j) tab_[i][j] -= f * tab_[row][j];
    }
    basis_[row] = static_cast<int>(col);
  }

  /// After phase 1, swap basic artificials for structural columns where a
  /// nonzero pivot exists; rows left with only artificials are redundant.
  void purge_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < 0 || static_cast<std::size_t>(basis_[i]) < art_begin_) continue;
      bool swapped = false;
      for (std::size_t j = 0; j < art_begin_; ++j) {
        if (std::abs(tab_[i][j]) > kPivotEps) {
          pivot(i, j);
          swapped = true;
          break;
        }
      }
      if (!swapped) basis_[i] = -1;  // redundant row
    }
    started_phase2_ = true;
    phase2_ = true;
  }

  std::size_t m_, n_, art_begin_;
  std::vector<std::vector<double>> tab_;
  std::vector<double> cost_;
  std::vector<int> basis_;
  bool phase2_ = false;
  bool started_phase2_ = false;
};

}  // namespace lpdetail

/// Exact-arithmetic-free simplex solve. Deterministic for fixed input;
/// feasibility/optimality tolerances around 1e-9 at desk scale.
inline LpSolution solve_lp(const LinearProgram& lp_in) {
  lp_in.validate();
  const std::size_t n0 = lp_in.num_vars();

  // Variable transformation to x >= 0 form.
  // kind 0: x = lo + x'; kind 1: x = hi - x'; kind 2: x = u - v (free).
  struct VarMap {
    int kind;
    double shift;
    int col_a, col_b;
  };
  std::vector<VarMap> vmap(n0);
  int cols = 0;
  for (std::size_t j = 0; j < n0; ++j) {
    double lo = lp_in.lower[j], hi = lp_in.upper[j];
    if (lo == -kInf && hi == kInf)
      vmap[j] = {2, 0.0, cols++, cols++};
    else if (lo == -kInf)
      vmap[j] = {1, hi, cols++, -1};
    else
      vmap[j] = {0, lo, cols++, -1};
  }

  struct StdRow {
    std::vector<double> a;
    Rel rel;
    double rhs;
  };
  std::vector<StdRow> rows;
  auto transform_row = [&](const std::vector<double>& coeffs, Rel rel, double rhs) {
    StdRow r;
    r.a.assign(cols, 0.0);
    r.rel = rel;
    r.rhs = rhs;
    for (std::size_t j = 0; j < n0; ++j) {
      double c = coeffs[j];
      if (c == 0.0) continue;
      const VarMap& vm = vmap[j];
      if (vm.kind == 0) {
        r.a[vm.col_a] += c;
        r.rhs -= c * vm.shift;
      } else if (vm.kind == 1) {
        r.a[vm.col_a] -= c;
        r.rhs -= c * vm.shift;
      } else {
        r.a[vm.col_a] += c;
        r.a[vm.col_b] -= c;
      }
    }
    return r;
  };

  for (const auto& row : lp_in.rows) rows.push_back(transform_row(row.coeffs, row.rel, row.rhs));
  // Finite upper bounds on shifted/plain vars become explicit rows.
  for (std::size_t j = 0; j < n0; ++j) {
    const VarMap& vm = vmap[j];
    if (vm.kind == 0 && lp_in.upper[j] != kInf) {
      StdRow r;
      r.a.assign(cols, 0.0);
      r.a[vm.col_a] = 1.0;
      r.rel = Rel::le;
      r.rhs = lp_in.upper[j] - vm.shift;
      rows.push_back(std::move(r));
    } else if (vm.kind == 1 && lp_in.lower[j] != -kInf) {
      StdRow r;
      r.a.assign(cols, 0.0);
      r.a[vm.col_a] = 1.0;
      r.rel = Rel::le;
      r.rhs = vm.shift - lp_in.lower[j];
      rows.push_back(std::move(r));
    }
  }

  // Objective in transformed space (always minimize internally).
  double obj_sign = lp_in.sense == Sense::maximize ? -1.0 : 1.0;
  std::vector<double> cost(cols, 0.0);
  double obj_const = 0.0;
  for (std::size_t j = 0; j < n0; ++j) {
    double c = obj_sign * lp_in.objective[j];
    if (c == 0.0) continue;
    const VarMap& vm = vmap[j];
    if (vm.kind == 0) {
      cost[vm.col_a] += c;
      obj_const += c * vm.shift;
    } else if (vm.kind == 1) {
      cost[vm.col_a] -= c;
      obj_const += c * vm.shift;
    } else {
      cost[vm.col_a] += c;
      cost[vm.col_b] -= c;
    }
  }

  // Build equality-standard form with slacks, then artificials.
  const std::size_t m = rows.size();
  // Normalize rhs sign first.
  for (auto& r : rows) {
    if (r.rhs < 0.0) {
      for (double& v : r.a) v = -v;
      r.rhs = -r.rhs;
      if (r.rel == Rel::le)
        r.rel = Rel::ge;
      else if (r.rel == Rel::ge)
        r.rel = Rel::le;
    }
  }
  std::size_t num_slacks = 0;
  for (const auto& r : rows)
    if (r.rel != Rel::eq) ++num_slacks;
  std::size_t num_artificials = 0;
  for (const auto& r : rows)
    if (r.rel != Rel::le) ++num_artificials;

  std::size_t total = cols + num_slacks + num_artificials;
  std::vector<std::vector<double>> A(m, std::vector<double>(total, 0.0));
  std::vector<double> b(m, 0.0);
  std::vector<double> c_full(total, 0.0);
  for (std::size_t j = 0; j < static_cast<std::size_t>(cols); ++j) c_full[j] = cost[j];

  std::vector<int> basis(m, -1);
  std::size_t slack_at = cols;
  std::size_t art_at = cols + num_slacks;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < static_cast<std::size_t>(cols); ++j) A[i][j] = rows[i].a[j];
    b[i] = rows[i].rhs;
    if (rows[i].rel == Rel::le) {
      A[i][slack_at] = 1.0;
      basis[i] = static_cast<int>(slack_at++);
    } else if (rows[i].rel == Rel::ge) {
      A[i][slack_at] = -1.0;
      ++slack_at;
      A[i][art_at] = 1.0;
      basis[i] = static_cast<int>(art_at++);
    } else {
      A[i][art_at] = 1.0;
      basis[i] = static_cast<int>(art_at++);
    }
  }

  lpdetail::Simplex simplex(std::move(A), std::move(b), std::move(c_full), num_artificials);
  std::vector<double> xs;
  double val = 0.0;
  LpStatus status = simplex.run(std::move(basis), &xs, &val);

  LpSolution sol;
  sol.status = status;
  if (status != LpStatus::optimal) return sol;

  sol.x.assign(n0, 0.0);
  for (std::size_t j = 0; j < n0; ++j) {
    const VarMap& vm = vmap[j];
    if (vm.kind == 0)
      sol.x[j] = vm.shift + xs[vm.col_a];
    else if (vm.kind == 1)
      sol.x[j] = vm.shift - xs[vm.col_a];
    else
      sol.x[j] = xs[vm.col_a] - xs[vm.col_b];
  }
  sol.value = obj_sign * (val + obj_const);
  return sol;
}

}  // namespace sgkit

#endif  // SGKIT_LP_HPP
