#ifndef SGKIT_STACKELBERG_HPP
#define SGKIT_STACKELBERG_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "sgkit/game_types.hpp"
#include "sgkit/lp.hpp"
#include "sgkit/nash.hpp"

namespace sgkit {

struct SseResult {
  MixedStrategy leader;
  int follower_action = -1;
  double leader_value = 0.0;
  std::size_t support_size = 0;
  double runtime_s = 0.0;
  bool tied_columns = false;  // several columns reach the optimum within 1e-9
};

/// Strong Stackelberg equilibrium by the multiple-LP method: for every
/// follower column j, maximize the leader payoff subject to j being a
/// follower best response; the answer is the best feasible column.
/// Strong tie-breaking (follower favors the leader) is realized by the
/// outer maximization; equal-value columns report the lowest index with
/// a multiplicity flag.
inline SseResult sse_multiple_lp(const Matrix& A, const Matrix& B) {
  detail::check_matrix(A);
  detail::check_matrix(B);
  if (A.size() != B.size() || A[0].size() != B[0].size())
    throw std::invalid_argument("sse_multiple_lp: A/B shape mismatch");
  const std::size_t n = A.size(), m = A[0].size();
  auto t0 = std::chrono::steady_clock::now();

  struct Candidate {
    double value;
    std::vector<double> x;
  };
  std::vector<std::pair<bool, Candidate>> results(m, {false, {}});

  parallel_for(m, [&](std::size_t j) {
    LinearProgram lp;
    lp.sense = Sense::maximize;
    for (std::size_t i = 0; i < n; ++i) lp.add_var(0.0, kInf, A[i][j]);
    for (std::size_t jp = 0; jp < m; ++jp) {
      if (jp == j) continue;
      std::vector<double> row(n, 0.0);
      for (std::size_t i = 0; i < n; ++i) row[i] = B[i][j] - B[i][jp];
      lp.add_row(std::move(row), Rel::ge, 0.0);
    }
    lp.add_row(std::vector<double>(n, 1.0), Rel::eq, 1.0);
    LpSolution sol = solve_lp(lp);
    if (sol.status == LpStatus::optimal) results[j] = {true, {sol.value, sol.x}};
  });

  SseResult best;
  bool found = false;
  int ties = 0;
  for (std::size_t j = 0; j < m; ++j) {
    if (!results[j].first) continue;
    const Candidate& c = results[j].second;
    if (!found || c.value > best.leader_value + 1e-9) {
      found = true;
      best.leader_value = c.value;
      best.follower_action = static_cast<int>(j);
      best.leader.probs = c.x;
      ties = 1;
    } else if (std::abs(c.value - best.leader_value) <= 1e-9) {
      ++ties;
    }
  }
  if (!found) throw std::runtime_error("sse_multiple_lp: no feasible follower column");
  best.tied_columns = ties > 1;
  best.support_size = best.leader.support_size();
  best.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return best;
}

struct CoverageSseResult {
  std::vector<double> coverage;
  int attacked_target = -1;  // index into the target list
  double defender_value = 0.0;
  std::size_t support_size = 0;
  double runtime_s = 0.0;
};

/// Singleton-schedule SSE coverage LP: for each target t, maximize the
/// defender's expected value at t over coverage vectors c in [0,1]^|T|
/// with sum(c) <= R, holding the attacker's expected value at t at least
/// as high as anywhere else. Support is measured on the coverage vector.
inline CoverageSseResult sse_simple_schedules(const std::vector<TargetSpec>& targets, int R) {
  if (targets.empty()) throw std::invalid_argument("sse_simple_schedules: no targets");
  if (R < 1) throw std::invalid_argument("sse_simple_schedules: R must be >= 1");
  const std::size_t Tn = targets.size();
  auto t0 = std::chrono::steady_clock::now();

  CoverageSseResult best;
  bool found = false;
  for (std::size_t t = 0; t < Tn; ++t) {
    LinearProgram lp;
    lp.sense = Sense::maximize;
    for (std::size_t i = 0; i < Tn; ++i) {
      double obj = 0.0;
      if (i == t) obj = targets[t].u_d_covered - targets[t].u_d_uncovered;
      lp.add_var(0.0, 1.0, obj);
    }
    // Attacker prefers t: u_a(t) >= u_a(j) in expectation over coverage.
    for (std::size_t j = 0; j < Tn; ++j) {
      if (j == t) continue;
      std::vector<double> row(Tn, 0.0);
      row[t] = targets[t].u_a_covered - targets[t].u_a_uncovered;
      row[j] = -(targets[j].u_a_covered - targets[j].u_a_uncovered);
      lp.add_row(std::move(row), Rel::ge,
                 targets[j].u_a_uncovered - targets[t].u_a_uncovered);
    }
    lp.add_row(std::vector<double>(Tn, 1.0), Rel::le, static_cast<double>(R));
    LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::optimal) continue;
    double value = sol.value + targets[t].u_d_uncovered;
    if (!found || value > best.defender_value + 1e-12) {
      found = true;
      best.defender_value = value;
      best.attacked_target = static_cast<int>(t);
      best.coverage = sol.x;
    }
  }
  if (!found) throw std::runtime_error("sse_simple_schedules: no feasible target");
  best.support_size = 0;
  for (double c : best.coverage)
    if (c > kSupportThreshold) ++best.support_size;
  best.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return best;
}

namespace detail {

/// Solves the k x k linear system M z = rhs in place; false if singular.
inline bool solve_linear_system(std::vector<std::vector<double>> M, std::vector<double> rhs,
                                std::vector<double>* out) {
  const std::size_t k = M.size();
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < k; ++r)
      if (std::abs(M[r][col]) > std::abs(M[pivot][col])) pivot = r;
    if (std::abs(M[pivot][col]) < 1e-12) return false;
    std::swap(M[col], M[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col) continue;
      double f = M[r][col] / M[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < k; ++c) M[r][c] -= f * M[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  out->assign(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) (*out)[i] = rhs[i] / M[i][i];
  return true;
}

}  // namespace detail

/// LP-free SSE oracle for games up to 4x4: enumerates the vertices of
/// each follower column's best-response polytope directly (every LP
/// optimum sits on one) plus a dense simplex grid sweep, and maximizes
/// the leader payoff over feasible points. Used as an independent check
/// of sse_multiple_lp.
inline double sse_bruteforce_oracle(const Matrix& A, const Matrix& B, int grid_resolution = 40) {
  detail::check_matrix(A);
  detail::check_matrix(B);
  const std::size_t n = A.size(), m = A[0].size();
  if (n > 4 || m > 4) throw std::invalid_argument("sse_bruteforce_oracle: size cap is 4x4");

  double best = -kInf;
  bool found = false;

  for (std::size_t j = 0; j < m; ++j) {
    // Constraint pool: x_i = 0 (n rows) and BR indifference rows.
    std::vector<std::vector<double>> pool;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> row(n, 0.0);
      row[i] = 1.0;
      pool.push_back(std::move(row));
    }
    std::vector<std::vector<double>> br_rows;
    for (std::size_t jp = 0; jp < m; ++jp) {
      if (jp == j) continue;
      std::vector<double> row(n, 0.0);
      for (std::size_t i = 0; i < n; ++i) row[i] = B[i][j] - B[i][jp];
      pool.push_back(row);
      br_rows.push_back(std::move(row));
    }

    auto feasible = [&](const std::vector<double>& x) {
      for (double v : x)
        if (v < -1e-9) return false;
      for (const auto& row : br_rows) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += row[i] * x[i];
        if (dot < -1e-9) return false;
      }
      return true;
    };
    auto leader_value = [&](const std::vector<double>& x) {
      double v = 0.0;
      for (std::size_t i = 0; i < n; ++i) v += x[i] * A[i][j];
      return v;
    };

    // Vertices: simplex equality + any n-1 active constraints from the pool.
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> enumerate = [&](std::size_t start) {
      if (pick.size() == n - 1) {
        std::vector<std::vector<double>> M;
        M.push_back(std::vector<double>(n, 1.0));
        std::vector<double> rhs{1.0};
        for (std::size_t p : pick) {
          M.push_back(pool[p]);
          rhs.push_back(0.0);
        }
        std::vector<double> x;
        if (detail::solve_linear_system(M, rhs, &x) && feasible(x)) {
          best = std::max(best, leader_value(x));
          found = true;
        }
        return;
      }
      for (std::size_t p = start; p < pool.size(); ++p) {
        pick.push_back(p);
        enumerate(p + 1);
        pick.pop_back();
      }
    };
    if (n == 1) {
      std::vector<double> x{1.0};
      if (feasible(x)) {
        best = std::max(best, leader_value(x));
        found = true;
      }
    } else {
      enumerate(0);
    }

    // Dense sweep adds robustness on degenerate polytopes.
    std::function<void(std::size_t, int, std::vector<int>&)> sweep = [&](std::size_t idx,
                                                                         int remaining,
                                                                         std::vector<int>& parts) {
      if (idx == n - 1) {
        parts[idx] = remaining;
        std::vector<double> x(n);
        for (std::size_t i = 0; i < n; ++i)
          x[i] = static_cast<double>(parts[i]) / grid_resolution;
        if (feasible(x)) {
          best = std::max(best, leader_value(x));
          found = true;
        }
        return;
      }
      for (int v = 0; v <= remaining; ++v) {
        parts[idx] = v;
        sweep(idx + 1, remaining - v, parts);
      }
    };
    if (grid_resolution > 0 && n > 1) {
      std::vector<int> parts(n, 0);
      sweep(0, grid_resolution, parts);
    }
  }

  if (!found) throw std::runtime_error("sse_bruteforce_oracle: no feasible point");
  return best;
}

}  // namespace sgkit

#endif  // SGKIT_STACKELBERG_HPP
