#ifndef SGKIT_REGRET_HPP
#define SGKIT_REGRET_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgkit/game_types.hpp"
#include "sgkit/nash.hpp"

namespace sgkit {

enum class RegretVariant { rm, rm_plus, prm_plus };

struct RegretMatchingParams {
  RegretVariant variant = RegretVariant::rm_plus;
  long iterations = 10000;
  double runtime_cap_s = 120.0;
  long sample_interval = 5;
};

namespace detail {

/// Regret-matching strategy: proportional to positive regrets, uniform
/// when none are positive.
inline std::vector<double> regret_strategy(const std::vector<double>& regrets) {
  std::vector<double> s(regrets.size(), 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < regrets.size(); ++i) {
    double r = std::max(regrets[i], 0.0);
    s[i] = r;
    total += r;
  }
  if (total <= 0.0) {
    std::fill(s.begin(), s.end(), 1.0 / static_cast<double>(s.size()));
  } else {
    for (double& v : s) v /= total;
  }
  return s;
}

inline double exploitability_gap(const Matrix& A, const std::vector<double>& x,
                                 const std::vector<double>& y) {
  std::vector<double> row_u = row_payoffs(A, y);
  std::vector<double> col_u = col_payoffs(A, x);
  double best_row = *std::max_element(row_u.begin(), row_u.end());
  double worst_col = *std::min_element(col_u.begin(), col_u.end());
  return best_row - worst_col;
}

}  // namespace detail

/// Regret-matching family on a zero-sum matrix.
///   rm       — simultaneous updates, uniform strategy averaging.
///   rm_plus  — nonnegative regret clipping, alternating updates,
///              linear (weight-t) averaging.
///   prm_plus — rm_plus with a one-step predictive term (the previous
///              instantaneous regret) and quadratic (weight-t^2)
///              averaging.
/// The duality gap of the running average strategies is sampled from
/// exact best responses every sample_interval iterations. The loop stops
/// at the iteration budget or the runtime cap, whichever hits first.
inline SolveReport regret_matching(const Matrix& A, const RegretMatchingParams& params) {
  detail::check_matrix(A);
  if (params.iterations < 1) throw std::invalid_argument("regret_matching: iterations < 1");
  const std::size_t n = A.size(), m = A[0].size();
  auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&]() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  std::vector<double> rx(n, 0.0), ry(m, 0.0);        // cumulative regrets
  std::vector<double> px(n, 0.0), py(m, 0.0);        // predictions (prm_plus)
  std::vector<double> avg_x(n, 0.0), avg_y(m, 0.0);  // weighted strategy sums
  std::vector<double> x(n, 1.0 / n), y(m, 1.0 / m);

  const bool plus = params.variant != RegretVariant::rm;
  const bool predictive = params.variant == RegretVariant::prm_plus;

  SolveReport report;
  long t = 0;
  std::string stop = "iterations";
  for (t = 1; t <= params.iterations; ++t) {
    if (elapsed() > params.runtime_cap_s) {
      stop = "runtime_cap";
      --t;
      break;
    }
    double w = 1.0;
    if (params.variant == RegretVariant::rm_plus) w = static_cast<double>(t);
    if (params.variant == RegretVariant::prm_plus) w = static_cast<double>(t) * t;

    if (!plus) {
      // Vanilla RM: simultaneous updates from the same strategy pair.
      x = detail::regret_strategy(rx);
      y = detail::regret_strategy(ry);
      std::vector<double> ux = detail::row_payoffs(A, y);
      std::vector<double> uy = detail::col_payoffs(A, x);
      double vx = 0.0, vy = 0.0;
      for (std::size_t i = 0; i < n; ++i) vx += x[i] * ux[i];
      for (std::size_t j = 0; j < m; ++j) vy -= y[j] * uy[j];
      for (std::size_t i = 0; i < n; ++i) rx[i] += ux[i] - vx;
      for (std::size_t j = 0; j < m; ++j) ry[j] += -uy[j] - vy;
    } else {
      // Alternating: the column player sees the row player's updated
      // strategy within the same iteration.
      std::vector<double> qx(n), qy(m);
      for (std::size_t i = 0; i < n; ++i) qx[i] = rx[i] + (predictive ? px[i] : 0.0);
      x = detail::regret_strategy(qx);
      std::vector<double> ux = detail::row_payoffs(A, y);
      double vx = 0.0;
      for (std::size_t i = 0; i < n; ++i) vx += x[i] * ux[i];
      for (std::size_t i = 0; i < n; ++i) {
        double inst = ux[i] - vx;
        rx[i] = std::max(rx[i] + inst, 0.0);
        if (predictive) px[i] = inst;
      }
      x = detail::regret_strategy(predictive ? [&] {
        std::vector<double> q(n);
        for (std::size_t i = 0; i < n; ++i) q[i] = rx[i] + px[i];
        return q;
      }() : rx);

      for (std::size_t j = 0; j < m; ++j) qy[j] = ry[j] + (predictive ? py[j] : 0.0);
      y = detail::regret_strategy(qy);
      std::vector<double> uy = detail::col_payoffs(A, x);  // column utility = -uy
      double vy = 0.0;
      for (std::size_t j = 0; j < m; ++j) vy += y[j] * (-uy[j]);
      for (std::size_t j = 0; j < m; ++j) {
        double inst = -uy[j] - vy;
        ry[j] = std::max(ry[j] + inst, 0.0);
        if (predictive) py[j] = inst;
      }
      y = detail::regret_strategy(predictive ? [&] {
        std::vector<double> q(m);
        for (std::size_t j = 0; j < m; ++j) q[j] = ry[j] + py[j];
        return q;
      }() : ry);
    }

    for (std::size_t i = 0; i < n; ++i) avg_x[i] += w * x[i];
    for (std::size_t j = 0; j < m; ++j) avg_y[j] += w * y[j];

    if (t % params.sample_interval == 0 || t == params.iterations) {
      std::vector<double> ax = avg_x, ay = avg_y;
      double sx = 0.0, sy = 0.0;
      for (double v : ax) sx += v;
      for (double v : ay) sy += v;
      for (double& v : ax) v /= sx;
      for (double& v : ay) v /= sy;
      report.gap_trace.push_back({t, elapsed(), detail::exploitability_gap(A, ax, ay)});
    }
  }
  if (t > params.iterations) t = params.iterations;

  double sx = 0.0, sy = 0.0;
  for (double v : avg_x) sx += v;
  for (double v : avg_y) sy += v;
  if (sx <= 0.0 || sy <= 0.0) {
    report.row_strategy = uniform_strategy(n);
    report.col_strategy = uniform_strategy(m);
  } else {
    report.row_strategy.probs.resize(n);
    report.col_strategy.probs.resize(m);
    for (std::size_t i = 0; i < n; ++i) report.row_strategy.probs[i] = avg_x[i] / sx;
    for (std::size_t j = 0; j < m; ++j) report.col_strategy.probs[j] = avg_y[j] / sy;
  }
  report.value = detail::game_value(A, report.row_strategy.probs, report.col_strategy.probs);
  report.iterations = t;
  report.stop_reason = stop;
  report.wall_time_s = elapsed();
  return report;
}

}  // namespace sgkit

#endif  // SGKIT_REGRET_HPP
