#ifndef SVDDCAP_TRAINER_HPP
#define SVDDCAP_TRAINER_HPP

#include <cstdint>
#include <vector>

#include "svddcap/types.hpp"

namespace svddcap {

/// Solution of the box-constrained simplex dual
///   max  sum_i alpha_i K_ii - sum_ij alpha_i alpha_j K_ij
///   s.t. sum_i alpha_i = 1,  0 <= alpha_i <= C.
struct DualSolution {
  Vector alphas;
  double objective_value = 0.0;
  std::uint64_t iterations = 0;
  double kkt_violation = 0.0;
  bool converged = false;
  // Dual objective after each pair update; filled when
  // SolveOptions::record_objective is set.
  std::vector<double> objective_history;
};

struct SolveOptions {
  double kkt_tolerance = 1e-6;
  std::uint64_t max_iterations = 0;  // 0: min(100 n^2, 1e7)
  bool record_objective = false;
};

/// Pairwise working-set descent: each iteration transfers mass between the
/// maximally KKT-violating pair (ties broken toward the lowest index), which
/// keeps sum(alpha) = 1 while the two-variable subproblem is solved exactly.
/// Deterministic for fixed inputs. A non-converged result is returned
/// flagged rather than thrown.
DualSolution solve_dual(const Matrix& kernel, double penalty);
DualSolution solve_dual(const Matrix& kernel, double penalty, const SolveOptions& options);

struct ThresholdInfo {
  double r2 = 0.0;
  double spread = 0.0;           // max - min of the per-vector estimates
  Eigen::Index unbounded_count = 0;
  bool fallback = false;         // estimated from bound support vectors only
};

/// Threshold R^2 averaged over every unbounded support vector
/// (eps_bound < alpha < C - eps_bound). When no unbounded vector exists the
/// estimate falls back to the bound support vectors and is accepted only if
/// they agree (covers the single-point model, where R^2 collapses to 0);
/// otherwise the model is degenerate.
ThresholdInfo threshold_info(const Vector& alphas, const Matrix& kernel, double penalty);
double compute_threshold(const DualSolution& solution, const Matrix& kernel, double penalty);

/// Input-space center a = sum_i alpha_i x_i.
Vector compute_center(const DualSolution& solution, const ProcessWindow& window);
Vector compute_center(const Vector& alphas, const Matrix& observations);

struct TrainReport {
  std::uint64_t iterations = 0;
  double kkt_violation = 0.0;
  double threshold_spread = 0.0;
  bool threshold_fallback = false;
  bool converged = false;
};

/// Train an SVDD description on the window. Solves the dual to the 1e-6 KKT
/// tolerance, then keeps tightening until the per-vector threshold estimates
/// agree to 1e-6 relative spread, so the stored R^2 is solver-noise free.
SvddModel train(const ProcessWindow& window, const HyperParams& hyper);
SvddModel train(const ProcessWindow& window, const HyperParams& hyper, TrainReport* report);

/// Median pairwise Euclidean distance, the fallback bandwidth when the
/// caller supplies none. Requires n >= 2 and at least two distinct rows.
double median_pairwise_distance(const ProcessWindow& window);

}  // namespace svddcap

#endif  // SVDDCAP_TRAINER_HPP
