#ifndef SGKIT_NASH_HPP
#define SGKIT_NASH_HPP

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgkit/game_types.hpp"
#include "sgkit/lp.hpp"
#include "sgkit/mip.hpp"

namespace sgkit {

using Matrix = std::vector<std::vector<double>>;

namespace detail {

inline void check_matrix(const Matrix& A) {
  if (A.empty() || A[0].empty()) throw std::invalid_argument("matrix: empty");
  for (const auto& row : A) {
    if (row.size() != A[0].size()) throw std::invalid_argument("matrix: ragged rows");
    for (double v : row)
      if (!std::isfinite(v)) throw std::invalid_argument("matrix: non-finite entry");
  }
}

inline std::vector<double> row_payoffs(const Matrix& A, const std::vector<double>& y) {
  std::vector<double> u(A.size(), 0.0);
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) u[i] += A[i][j] * y[j];
  return u;
}

inline std::vector<double> col_payoffs(const Matrix& A, const std::vector<double>& x) {
  std::vector<double> u(A[0].size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) u[j] += A[i][j] * x[i];
  return u;
}

inline double game_value(const Matrix& A, const std::vector<double>& x,
                         const std::vector<double>& y) {
  double v = 0.0;
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) v += x[i] * A[i][j] * y[j];
  return v;
}

/// Row player's maximin LP: max v s.t. (x^T A)_j >= v for all j, x in simplex.
inline LpSolution solve_maximin(const Matrix& A) {
  const std::size_t n = A.size(), m = A[0].size();
  LinearProgram lp;
  lp.sense = Sense::maximize;
  for (std::size_t i = 0; i < n; ++i) lp.add_var(0.0, kInf, 0.0);
  int v = lp.add_var(-kInf, kInf, 1.0);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<double> row(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) row[i] = A[i][j];
    row[v] = -1.0;
    lp.add_row(std::move(row), Rel::ge, 0.0);
  }
  std::vector<double> simplex_row(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) simplex_row[i] = 1.0;
  lp.add_row(std::move(simplex_row), Rel::eq, 1.0);
  return solve_lp(lp);
}

inline Matrix negate_transpose(const Matrix& A) {
  Matrix B(A[0].size(), std::vector<double>(A.size(), 0.0));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A[0].size(); ++j) B[j][i] = -A[i][j];
  return B;
}

}  // namespace detail

/// Minimax LP on a zero-sum matrix (row player = defender). The value is
/// cross-checked against the column player's LP; both must agree within
/// 1e-7 or the solve is reported as failed.
inline SolveReport nash_lp(const Matrix& A) {
  detail::check_matrix(A);
  auto t0 = std::chrono::steady_clock::now();

  LpSolution row_sol = detail::solve_maximin(A);
  if (row_sol.status != LpStatus::optimal)
    throw std::runtime_error("nash_lp: row LP not optimal");
  LpSolution col_sol = detail::solve_maximin(detail::negate_transpose(A));
  if (col_sol.status != LpStatus::optimal)
    throw std::runtime_error("nash_lp: column LP not optimal");
  if (std::abs(row_sol.value + col_sol.value) > 1e-7)
    throw std::runtime_error("nash_lp: minimax cross-check failed");

  SolveReport report;
  report.value = row_sol.value;
  report.row_strategy.probs.assign(row_sol.x.begin(), row_sol.x.begin() + A.size());
  report.col_strategy.probs.assign(col_sol.x.begin(), col_sol.x.begin() + A[0].size());
  report.iterations = 1;
  report.stop_reason = "optimal";
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

/// Support-bounded maximin: binary indicators y_i gate each row's mass
/// (x_i <= y_i, sum y <= k). Value is nondecreasing in k and meets the
/// Nash LP value once k reaches the row count.
inline SolveReport sparse_nash_milp(const Matrix& A, int k) {
  detail::check_matrix(A);
  const std::size_t n = A.size(), m = A[0].size();
  if (k < 1 || k > static_cast<int>(n))
    throw std::invalid_argument("sparse_nash_milp: k out of range");
  auto t0 = std::chrono::steady_clock::now();

  MipProgram mip;
  LinearProgram& lp = mip.lp;
  lp.sense = Sense::maximize;
  for (std::size_t i = 0; i < n; ++i) lp.add_var(0.0, 1.0, 0.0);  // x
  int v = lp.add_var(-kInf, kInf, 1.0);
  for (std::size_t i = 0; i < n; ++i) mip.binary_vars.push_back(lp.add_var(0.0, 1.0, 0.0));

  const std::size_t total = lp.num_vars();
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<double> row(total, 0.0);
    for (std::size_t i = 0; i < n; ++i) row[i] = A[i][j];
    row[v] = -1.0;
    lp.add_row(std::move(row), Rel::ge, 0.0);
  }
  std::vector<double> simplex_row(total, 0.0);
  for (std::size_t i = 0; i < n; ++i) simplex_row[i] = 1.0;
  lp.add_row(std::move(simplex_row), Rel::eq, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> row(total, 0.0);
    row[i] = 1.0;
    row[mip.binary_vars[i]] = -1.0;
    lp.add_row(std::move(row), Rel::le, 0.0);
  }
  std::vector<double> card(total, 0.0);
  for (int b : mip.binary_vars) card[b] = 1.0;
  lp.add_row(std::move(card), Rel::le, static_cast<double>(k));

  LpSolution sol = solve_mip(mip);
  if (sol.status != LpStatus::optimal)
    throw std::runtime_error("sparse_nash_milp: MIP not optimal");

  SolveReport report;
  report.value = sol.value;
  report.row_strategy.probs.assign(sol.x.begin(), sol.x.begin() + n);
  report.iterations = 1;
  report.stop_reason = "optimal";
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace sgkit

#endif  // SGKIT_NASH_HPP
