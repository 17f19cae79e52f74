#ifndef SGKIT_MIP_HPP
#define SGKIT_MIP_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "sgkit/lp.hpp"

namespace sgkit {

/// Linear program plus a set of binary-restricted variable indices.
struct MipProgram {
  LinearProgram lp;
  std::vector<int> binary_vars;

  void validate() const {
    lp.validate();
    for (int j : binary_vars)
      if (j < 0 || j >= static_cast<int>(lp.num_vars()))
        throw std::invalid_argument("mip: binary index out of range");
  }
};

/// Exact branch-and-bound over LP relaxations. Branching is
/// deterministic: the lowest-index fractional binary splits first, zero
/// branch explored before the one branch. Desk scale (tens of binaries).
inline LpSolution solve_mip(const MipProgram& mip) {
  mip.validate();
  constexpr double kIntEps = 1e-6;
  const double sign = mip.lp.sense == Sense::maximize ? 1.0 : -1.0;
  std::vector<int> binaries = mip.binary_vars;
  std::sort(binaries.begin(), binaries.end());

  LinearProgram relaxed = mip.lp;
  for (int j : binaries) {
    relaxed.lower[j] = std::max(relaxed.lower[j], 0.0);
    relaxed.upper[j] = std::min(relaxed.upper[j], 1.0);
  }

  struct Node {
    std::vector<std::pair<int, int>> fixes;  // (var, value)
  };
  std::vector<Node> stack{{}};

  LpSolution best;
  best.status = LpStatus::infeasible;
  bool unbounded_root = false;

  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();

    LinearProgram sub = relaxed;
    for (const auto& [j, v] : node.fixes) {
      sub.lower[j] = v;
      sub.upper[j] = v;
    }
    LpSolution rel = solve_lp(sub);
    if (rel.status == LpStatus::infeasible) continue;
    if (rel.status == LpStatus::unbounded) {
      if (node.fixes.empty()) unbounded_root = true;
      continue;
    }
    if (best.status == LpStatus::optimal && sign * rel.value <= sign * best.value + 1e-9)
      continue;  // bound cannot beat incumbent

    int branch_var = -1;
    for (int j : binaries) {
      double v = rel.x[j];
      if (std::abs(v - std::round(v)) > kIntEps) {
        branch_var = j;
        break;
      }
    }
    if (branch_var < 0) {
      for (int j : binaries) rel.x[j] = std::round(rel.x[j]);
      if (best.status != LpStatus::optimal || sign * rel.value > sign * best.value) best = rel;
      continue;
    }
    // LIFO: push the one branch first so the zero branch pops first.
    Node one = node, zero = std::move(node);
    one.fixes.emplace_back(branch_var, 1);
    zero.fixes.emplace_back(branch_var, 0);
    stack.push_back(std::move(one));
    stack.push_back(std::move(zero));
  }

  if (best.status != LpStatus::optimal && unbounded_root) {
    best.status = LpStatus::unbounded;
  }
  return best;
}

}  // namespace sgkit

#endif  // SGKIT_MIP_HPP
