#ifndef SGKIT_RANDOM_GAMES_HPP
#define SGKIT_RANDOM_GAMES_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "sgkit/common.hpp"
#include "sgkit/nash.hpp"
#include "sgkit/stackelberg.hpp"

namespace sgkit {

/// Uniform-bimatrix model: A, B entries i.i.d. U[0,1].
inline std::pair<Matrix, Matrix> sample_uniform_bimatrix(int n, int m, RngStream& rng) {
  Matrix A(n, std::vector<double>(m)), B(n, std::vector<double>(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) A[i][j] = rng.uniform01();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) B[i][j] = rng.uniform01();
  return {A, B};
}

/// Random security model: schedules partition the targets; uncovered
/// payoffs sampled u_d in U[-1,0], u_a in U[0,1]; covered payoffs zero.
struct RandomSecurityInstance {
  std::vector<std::vector<int>> schedules;  // target indices per schedule
  std::vector<double> u_a_uncovered;        // per target
  std::vector<double> u_d_uncovered;        // per target
  double resources = 1.0;                   // R, real-valued per the model
};

inline RandomSecurityInstance sample_random_security(const std::vector<int>& partition_sizes,
                                                     double resources, RngStream& rng) {
  if (resources <= 0.0)
    throw std::invalid_argument("sample_random_security: R must be positive");
  RandomSecurityInstance inst;
  inst.resources = resources;
  int t = 0;
  for (int size : partition_sizes) {
    if (size < 1) throw std::invalid_argument("sample_random_security: empty schedule");
    std::vector<int> sched;
    for (int i = 0; i < size; ++i) sched.push_back(t++);
    inst.schedules.push_back(std::move(sched));
  }
  inst.u_a_uncovered.resize(t);
  inst.u_d_uncovered.resize(t);
  for (int i = 0; i < t; ++i) inst.u_a_uncovered[i] = rng.uniform01();
  for (int i = 0; i < t; ++i) inst.u_d_uncovered[i] = -rng.uniform01();
  return inst;
}

/// Leader value of the best pure strategy: max_i A[i][j(i)] with j(i) the
/// follower's best response to row i (ties to the lowest column).
inline double best_pure_sse_value(const Matrix& A, const Matrix& B) {
  detail::check_matrix(A);
  detail::check_matrix(B);
  double best = -kInf;
  for (std::size_t i = 0; i < A.size(); ++i) {
    std::size_t j = 0;
    for (std::size_t c = 1; c < B[i].size(); ++c)
      if (B[i][c] > B[i][j]) j = c;
    best = std::max(best, A[i][j]);
  }
  return best;
}

/// Leader's best value after the follower best-responds to x, ties broken
/// in the leader's favor.
inline double leader_value_against_best_response(const Matrix& A, const Matrix& B,
                                                 const std::vector<double>& x) {
  const std::size_t m = A[0].size();
  std::vector<double> fb(m, 0.0), lv(m, 0.0);
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < m; ++j) {
      fb[j] += x[i] * B[i][j];
      lv[j] += x[i] * A[i][j];
    }
  double fmax = *std::max_element(fb.begin(), fb.end());
  double best = -kInf;
  for (std::size_t j = 0; j < m; ++j)
    if (fb[j] >= fmax - 1e-12) best = std::max(best, lv[j]);
  return best;
}

/// Best SSE leader value over supports of size <= k, by exhaustive
/// support enumeration with the multiple-LP solver on each restricted
/// row set. Exact for n <= 12.
inline double best_k_sparse_sse_value(const Matrix& A, const Matrix& B, int k) {
  detail::check_matrix(A);
  const int n = static_cast<int>(A.size());
  if (n > 12) throw std::invalid_argument("best_k_sparse_sse_value: exact mode caps at n=12");
  if (k < 1) throw std::invalid_argument("best_k_sparse_sse_value: k must be >= 1");
  k = std::min(k, n);
  if (k == 1) return best_pure_sse_value(A, B);

  double best = -kInf;
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == k) {
      Matrix Ar(k), Br(k);
      for (int r = 0; r < k; ++r) {
        Ar[r] = A[idx[r]];
        Br[r] = B[idx[r]];
      }
      best = std::max(best, sse_multiple_lp(Ar, Br).leader_value);
      return;
    }
    for (int i = start; i <= n - (k - pos); ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return best;
}

/// The explicit sparse leader strategy from the random-game analysis:
/// take the high-payoff pair set S at threshold 1 - delta_n with
/// delta_n = 2^11 sqrt(log n) / n^(3/2), anchor on the pair maximizing
/// the follower payoff over S, reinforce with the top rows of the anchor
/// column among rows clean outside S, and mix with weight
/// eta_n = 8 (1 - B[i*][j*]) spread uniformly over those rows. Returns
/// e_1 when S is empty. eta is clamped into [0,1] so the result is a
/// valid strategy at small n.
inline MixedStrategy construct_sparse_leader_strategy(const Matrix& A, const Matrix& B) {
  detail::check_matrix(A);
  const int n = static_cast<int>(A.size());
  if (n < 2 || static_cast<int>(A[0].size()) != n)
    throw std::invalid_argument("construct_sparse_leader_strategy: needs square n>=2");

  const double delta = std::exp2(11) * std::sqrt(std::log(n)) / std::pow(n, 1.5);
  MixedStrategy x;
  x.probs.assign(n, 0.0);

  int istar = -1, jstar = -1;
  double bbest = -kInf;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (A[i][j] >= 1.0 - delta && B[i][j] > bbest) {
        bbest = B[i][j];
        istar = i;
        jstar = j;
      }
  if (istar < 0) {
    x.probs[0] = 1.0;
    return x;
  }

  // Rows with a significant follower payoff in column j* and no other
  // S-entries anywhere in the row.
  std::vector<int> candidates;
  for (int i = 0; i < n; ++i) {
    if (i == istar || B[i][jstar] < 0.75) continue;
    bool clean = true;
    for (int j = 0; j < n && clean; ++j)
      if (j != jstar && A[i][j] >= 1.0 - delta) clean = false;
    if (clean) candidates.push_back(i);
  }
  std::sort(candidates.begin(), candidates.end(),
            [&](int a, int b) { return A[a][jstar] > A[b][jstar]; });
  const int c0 = 200;
  int l0 = static_cast<int>(std::floor(c0 * std::log(n))) - 1;
  if (l0 < static_cast<int>(candidates.size())) candidates.resize(l0);

  double eta = std::clamp(8.0 * (1.0 - B[istar][jstar]), 0.0, 1.0);
  if (candidates.empty()) {
    x.probs[istar] = 1.0;
    return x;
  }
  x.probs[istar] = 1.0 - eta;
  for (int i : candidates) x.probs[i] += eta / static_cast<double>(candidates.size());
  return x;
}

struct SecurityDefenseResult {
  std::vector<double> schedule_coverage;  // per schedule
  int attacked_target = -1;               // target index
  double defender_value = 0.0;
  int l_max = 0;
};

/// The explicit defense for the random security model: order schedules
/// by their best attacker value v_i, find the deepest index L_max whose
/// partial handicap sum stays below R, pick the schedule among the first
/// L_max with the best defender payoff, and cover the higher-ranked
/// schedules just enough (slack delta = 1e-9) that the attacker's best
/// response lands on the chosen target. Verifies that best response
/// exactly before returning.
inline SecurityDefenseResult construct_random_security_defense(
    const RandomSecurityInstance& inst) {
  const std::size_t k = inst.schedules.size();
  if (k == 0) throw std::invalid_argument("construct_random_security_defense: no schedules");
  constexpr double kSlack = 1e-9;

  std::vector<double> v(k, 0.0);
  std::vector<int> best_target(k, -1);
  for (std::size_t i = 0; i < k; ++i) {
    for (int t : inst.schedules[i]) {
      if (best_target[i] < 0 || inst.u_a_uncovered[t] > v[i]) {
        v[i] = inst.u_a_uncovered[t];
        best_target[i] = t;
      }
    }
  }

  SecurityDefenseResult result;
  result.schedule_coverage.assign(k, 0.0);

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (v[a] != v[b]) return v[a] > v[b];
    return a < b;
  });

  if (v[order[0]] <= 0.0) {
    // Zero attacker values everywhere (measure-zero): nothing to cover.
    result.attacked_target = best_target[order[0]];
    result.defender_value = inst.u_d_uncovered[result.attacked_target];
    result.l_max = static_cast<int>(k);
    return result;
  }

  int l_max = 0;
  for (std::size_t l = 1; l <= k; ++l) {
    double sum = 0.0;
    for (std::size_t s = 1; s <= l; ++s)
      sum += (v[order[s - 1]] - v[order[l - 1]]) / v[order[s - 1]];
    if (sum < inst.resources)
      l_max = static_cast<int>(l);
  }
  result.l_max = l_max;

  int lstar = 1;
  for (int l = 2; l <= l_max; ++l)
    if (inst.u_d_uncovered[best_target[order[l - 1]]] >
        inst.u_d_uncovered[best_target[order[lstar - 1]]])
      lstar = l;

  const double v_star = v[order[lstar - 1]];
  for (int l = 1; l < lstar; ++l) {
    std::size_t i = order[l - 1];
    result.schedule_coverage[i] = (v[i] - v_star + kSlack) / v[i];
  }

  result.attacked_target = best_target[order[lstar - 1]];
  result.defender_value = inst.u_d_uncovered[result.attacked_target];

  // Exact-best-response check: the attacked target must be the argmax of
  // post-coverage attacker values.
  int argmax = -1;
  double amax = -kInf;
  for (std::size_t i = 0; i < k; ++i)
    for (int t : inst.schedules[i]) {
      double val = inst.u_a_uncovered[t] * (1.0 - result.schedule_coverage[i]);
      if (val > amax) {
        amax = val;
        argmax = t;
      }
    }
  if (argmax != result.attacked_target)
    throw std::runtime_error(
        "construct_random_security_defense: attacker best response mismatch");
  return result;
}

/// Aggregate degeneracy statistics on sampled uniform bimatrix games.
struct DegeneracyReport {
  int n = 0;
  int num_samples = 0;
  std::uint64_t seed = 0;
  std::vector<int> sse_support_sizes;
  std::vector<double> sse_leader_values;
  std::vector<double> best_pure_values;
  double mean_support = 0.0;
  double median_support = 0.0;
  double mean_leader_value = 0.0;
  double mean_best_pure = 0.0;
  double support_q25 = 0.0, support_q75 = 0.0, support_q90 = 0.0;
};

namespace detail {

inline double quantile_sorted(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  double pos = q * (sorted.size() - 1);
  std::size_t lo = static_cast<std::size_t>(pos);
  std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  double frac = pos - lo;
  return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

}  // namespace detail

/// Per-sample SSE support, leader value, and best-pure value on uniform
/// bimatrix draws; sample streams derive from (seed, index) so reports
/// are reproducible for any worker count.
inline DegeneracyReport degeneracy_report(int n, int num_samples, std::uint64_t seed) {
  if (n < 1 || n > 50) throw std::invalid_argument("degeneracy_report: n must be in [1,50]");
  DegeneracyReport report;
  report.n = n;
  report.num_samples = num_samples;
  report.seed = seed;
  report.sse_support_sizes.assign(num_samples, 0);
  report.sse_leader_values.assign(num_samples, 0.0);
  report.best_pure_values.assign(num_samples, 0.0);

  parallel_for(static_cast<std::size_t>(num_samples), [&](std::size_t s) {
    RngStream rng = RngStream::derive(seed, s);
    auto [A, B] = sample_uniform_bimatrix(n, n, rng);
    SseResult sse = sse_multiple_lp(A, B);
    report.sse_support_sizes[s] = static_cast<int>(sse.support_size);
    report.sse_leader_values[s] = sse.leader_value;
    report.best_pure_values[s] = best_pure_sse_value(A, B);
  });

  std::vector<double> supports(report.sse_support_sizes.begin(), report.sse_support_sizes.end());
  std::sort(supports.begin(), supports.end());
  report.mean_support =
      std::accumulate(supports.begin(), supports.end(), 0.0) / std::max(1, num_samples);
  report.median_support = detail::quantile_sorted(supports, 0.5);
  report.support_q25 = detail::quantile_sorted(supports, 0.25);
  report.support_q75 = detail::quantile_sorted(supports, 0.75);
  report.support_q90 = detail::quantile_sorted(supports, 0.9);
  report.mean_leader_value =
      std::accumulate(report.sse_leader_values.begin(), report.sse_leader_values.end(), 0.0) /
      std::max(1, num_samples);
  report.mean_best_pure =
      std::accumulate(report.best_pure_values.begin(), report.best_pure_values.end(), 0.0) /
      std::max(1, num_samples);
  return report;
}

/// One-sample Kolmogorov-Smirnov statistic against a CDF.
template <typename Cdf>
double ks_statistic(std::vector<double> samples, Cdf cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    double f = cdf(samples[i]);
    d = std::max(d, std::abs((i + 1) / n - f));
    d = std::max(d, std::abs(f - i / n));
  }
  return d;
}

/// Asymptotic KS critical value at significance alpha.
inline double ks_critical(std::size_t n, double alpha) {
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(static_cast<double>(n));
}

}  // namespace sgkit

#endif  // SGKIT_RANDOM_GAMES_HPP
