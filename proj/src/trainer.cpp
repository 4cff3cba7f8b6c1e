#include "svddcap/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "svddcap/kernel.hpp"

namespace svddcap {

namespace {

constexpr double kTauKkt = 1e-6;          // design working tolerance
constexpr double kTauFloor = 1e-13;       // polishing stops at fp noise level
constexpr std::uint64_t kHardIterationCap = 10'000'000;

std::uint64_t default_budget(Eigen::Index n) {
  const double soft = 100.0 * static_cast<double>(n) * static_cast<double>(n);
  return static_cast<std::uint64_t>(std::min<double>(soft, static_cast<double>(kHardIterationCap)));
}

void validate_kernel(const Matrix& kernel, double penalty) {
  const Eigen::Index n = kernel.rows();
  if (n < 1 || kernel.cols() != n) {
    throw ValidationError("kernel matrix must be square and non-empty");
  }
  if (!kernel.allFinite()) {
    throw ValidationError("kernel matrix contains a non-finite value");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(kernel(i, i) - 1.0) > 1e-9) {
      throw ValidationError("kernel matrix must have a unit diagonal");
    }
  }
  if (!(penalty >= 1.0 / static_cast<double>(n) - 1e-12)) {
    throw ValidationError("penalty C below 1/n makes the dual infeasible");
  }
}

// Pairwise coordinate descent on
//   min f(alpha) = alpha' K alpha - sum_i alpha_i K_ii
//   s.t. sum alpha = 1, 0 <= alpha <= C.
// grad_i = 2 (K alpha)_i - K_ii. Moving mass delta from donor v to receiver
// u changes f by delta (g_u - g_v) + delta^2 (K_uu - 2 K_uv + K_vv), so the
// one-dimensional subproblem is solved exactly and clipped to the box.
class PairwiseSolver {
 public:
  PairwiseSolver(const Matrix& kernel, double penalty)
      : kernel_(kernel), penalty_(penalty), n_(kernel.rows()) {
    alpha_ = Vector::Constant(n_, 1.0 / static_cast<double>(n_));
    refresh_gradient();
  }

  const Vector& alphas() const { return alpha_; }
  std::uint64_t iterations() const { return iterations_; }
  double last_violation() const { return violation_; }
  bool last_converged() const { return converged_; }

  // Runs until the exact KKT violation is <= tau or the global iteration
  // budget is exhausted. Convergence signalled by the incrementally updated
  // gradient is re-verified against a freshly computed one before being
  // trusted.
  void run(double tau, std::uint64_t budget, std::vector<double>* history) {
    double objective = history ? dual_objective() : 0.0;
    while (iterations_ < budget) {
      auto [u, v, gap] = find_pair();
      if (u < 0 || gap <= tau) {
        refresh_gradient();
        std::tie(u, v, gap) = find_pair();
        if (u < 0 || gap <= tau) {
          violation_ = std::max(gap, 0.0);
          converged_ = true;
          return;
        }
      }
      const double eta = kernel_(u, u) - 2.0 * kernel_(u, v) + kernel_(v, v);
      const double room_u = penalty_ - alpha_[u];
      const double room_v = alpha_[v];
      double delta = std::min(room_u, room_v);
      if (eta > 0.0) {
        delta = std::min(delta, gap / (2.0 * eta));
      }
      alpha_[u] = (delta == room_u) ? penalty_ : alpha_[u] + delta;
      alpha_[v] = (delta == room_v) ? 0.0 : alpha_[v] - delta;
      apply_gradient_transfer(u, v, delta);
      ++iterations_;
      if (history) {
        objective += delta * (gap - delta * eta);
        history->push_back(objective);
      }
    }
    refresh_gradient();
    const auto [u, v, gap] = find_pair();
    (void)u;
    (void)v;
    violation_ = std::max(gap, 0.0);
    converged_ = violation_ <= tau;
  }

  // Moves any positive mass at or below eps_bound onto the largest
  // coefficient with room, so bound classification never straddles the
  // dropped range. Returns true when something moved.
  bool sweep_stragglers() {
    const double eps = eps_bound(penalty_);
    bool changed = false;
    for (Eigen::Index i = 0; i < n_; ++i) {
      if (alpha_[i] <= 0.0 || alpha_[i] > eps) continue;
      Eigen::Index receiver = -1;
      for (Eigen::Index j = 0; j < n_; ++j) {
        if (j == i || alpha_[j] <= eps) continue;
        if (alpha_[j] + alpha_[i] > penalty_) continue;
        if (receiver < 0 || alpha_[j] > alpha_[receiver]) receiver = j;
      }
      if (receiver < 0) continue;
      const double delta = alpha_[i];
      alpha_[receiver] += delta;
      alpha_[i] = 0.0;
      apply_gradient_transfer(receiver, i, delta);
      changed = true;
    }
    return changed;
  }

  double dual_objective() const {
    double linear = 0.0;
    double quadratic = 0.0;
    for (Eigen::Index i = 0; i < n_; ++i) {
      linear += alpha_[i] * kernel_(i, i);
      if (alpha_[i] == 0.0) continue;
      double row = 0.0;
      const double* ki = kernel_.data() + i * n_;
      for (Eigen::Index j = 0; j < n_; ++j) {
        row += ki[j] * alpha_[j];
      }
      quadratic += alpha_[i] * row;
    }
    return linear - quadratic;
  }

 private:
  void refresh_gradient() {
    grad_.resize(n_);
    for (Eigen::Index i = 0; i < n_; ++i) {
      double acc = 0.0;
      const double* ki = kernel_.data() + i * n_;
      for (Eigen::Index j = 0; j < n_; ++j) {
        if (alpha_[j] != 0.0) acc += ki[j] * alpha_[j];
      }
      grad_[i] = 2.0 * acc - kernel_(i, i);
    }
  }

  void apply_gradient_transfer(Eigen::Index to, Eigen::Index from, double delta) {
    const double scale = 2.0 * delta;
    const double* kt = kernel_.data() + to * n_;
    const double* kf = kernel_.data() + from * n_;
    for (Eigen::Index l = 0; l < n_; ++l) {
      grad_[l] += scale * (kt[l] - kf[l]);
    }
  }

  // Receiver: smallest gradient among alpha < C. Donor: largest gradient
  // among alpha > 0. Strict comparisons keep the lowest index on ties.
  std::tuple<Eigen::Index, Eigen::Index, double> find_pair() const {
    Eigen::Index u = -1;
    Eigen::Index v = -1;
    double g_min = std::numeric_limits<double>::infinity();
    double g_max = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < n_; ++i) {
      if (alpha_[i] < penalty_ && grad_[i] < g_min) {
        g_min = grad_[i];
        u = i;
      }
      if (alpha_[i] > 0.0 && grad_[i] > g_max) {
        g_max = grad_[i];
        v = i;
      }
    }
    if (u < 0 || v < 0 || u == v) {
      return {-1, -1, 0.0};
    }
    return {u, v, g_max - g_min};
  }

  const Matrix& kernel_;
  double penalty_;
  Eigen::Index n_;
  Vector alpha_;
  Vector grad_;
  std::uint64_t iterations_ = 0;
  double violation_ = 0.0;
  bool converged_ = false;
};

}  // namespace

DualSolution solve_dual(const Matrix& kernel, double penalty) {
  return solve_dual(kernel, penalty, SolveOptions{});
}

DualSolution solve_dual(const Matrix& kernel, double penalty, const SolveOptions& options) {
  validate_kernel(kernel, penalty);
  PairwiseSolver solver(kernel, penalty);
  const std::uint64_t budget =
      options.max_iterations ? options.max_iterations : default_budget(kernel.rows());
  DualSolution solution;
  solver.run(options.kkt_tolerance, budget,
             options.record_objective ? &solution.objective_history : nullptr);
  solution.alphas = solver.alphas();
  solution.objective_value = solver.dual_objective();
  solution.iterations = solver.iterations();
  solution.kkt_violation = solver.last_violation();
  solution.converged = solver.last_converged();
  return solution;
}

ThresholdInfo threshold_info(const Vector& alphas, const Matrix& kernel, double penalty) {
  const Eigen::Index n = alphas.size();
  const double eps = eps_bound(penalty);
  std::vector<Eigen::Index> support;
  std::vector<Eigen::Index> unbounded;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (alphas[i] > eps) {
      support.push_back(i);
      if (alphas[i] < penalty - eps) unbounded.push_back(i);
    }
  }
  if (support.empty()) {
    throw DegenerateModelError("solution has no support vectors");
  }

  double w = 0.0;
  for (const Eigen::Index i : support) {
    double row = 0.0;
    for (const Eigen::Index j : support) {
      row += alphas[j] * kernel(i, j);
    }
    w += alphas[i] * row;
  }

  ThresholdInfo info;
  info.offset_w = w;
  info.unbounded_count = static_cast<Eigen::Index>(unbounded.size());
  info.fallback = unbounded.empty();
  const std::vector<Eigen::Index>& eval_set = info.fallback ? support : unbounded;

  double sum = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const Eigen::Index k : eval_set) {
    double cross = 0.0;
    for (const Eigen::Index i : support) {
      cross += alphas[i] * kernel(i, k);
    }
    const double r = kernel(k, k) - 2.0 * cross + w;
    sum += r;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  info.r2 = sum / static_cast<double>(eval_set.size());
  info.spread = hi - lo;
  if (info.fallback && info.spread > std::max(1e-6 * std::abs(info.r2), 1e-12)) {
    throw DegenerateModelError(
        "all support vectors sit at the penalty bound; lower the outlier fraction f");
  }
  info.r2 = std::max(info.r2, 0.0);
  return info;
}

double compute_threshold(const DualSolution& solution, const Matrix& kernel, double penalty) {
  return threshold_info(solution.alphas, kernel, penalty).r2;
}

Vector compute_center(const Vector& alphas, const Matrix& observations) {
  if (alphas.size() != observations.rows()) {
    throw ValidationError("coefficient count does not match observation count");
  }
  Vector center = Vector::Zero(observations.cols());
  for (Eigen::Index i = 0; i < observations.rows(); ++i) {
    if (alphas[i] == 0.0) continue;
    for (Eigen::Index j = 0; j < observations.cols(); ++j) {
      center[j] += alphas[i] * observations(i, j);
    }
  }
  return center;
}

Vector compute_center(const DualSolution& solution, const ProcessWindow& window) {
  return compute_center(solution.alphas, window.observations);
}

SvddModel train(const ProcessWindow& window, const HyperParams& hyper) {
  return train(window, hyper, nullptr);
}

SvddModel train(const ProcessWindow& window, const HyperParams& hyper, TrainReport* report) {
  hyper.validate();
  const Eigen::Index n = window.size();
  const double penalty = hyper.penalty(n);
  const Matrix kernel = kernel_matrix(window.observations, hyper.bandwidth);

  PairwiseSolver solver(kernel, penalty);
  const std::uint64_t budget = default_budget(n);
  double tau = kTauKkt;
  int sweep_rounds = 5;
  ThresholdInfo info;
  for (;;) {
    solver.run(tau, budget, nullptr);
    if (!solver.last_converged()) {
      if (solver.last_violation() > kTauKkt) {
        std::ostringstream msg;
        msg << "dual solver did not converge within " << solver.iterations()
            << " iterations; final KKT violation " << solver.last_violation();
        throw ConvergenceError(msg.str());
      }
      info = threshold_info(solver.alphas(), kernel, penalty);
      break;  // at base tolerance but out of budget for further polishing
    }
    if (sweep_rounds > 0 && solver.sweep_stragglers()) {
      --sweep_rounds;
      continue;
    }
    info = threshold_info(solver.alphas(), kernel, penalty);
    if (info.unbounded_count == 0) break;
    if (info.spread <= 0.5e-6 * info.r2 || info.spread <= kTauFloor || tau <= kTauFloor) break;
    tau *= 0.1;
  }

  // Retained support set. Residual mass below eps_bound is folded onto the
  // largest coefficient so that sum(alpha) over the stored vectors stays 1.
  Vector alphas = solver.alphas();
  const double eps = eps_bound(penalty);
  double residual = 0.0;
  Eigen::Index largest = -1;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (alphas[i] > 0.0 && alphas[i] <= eps) {
      residual += alphas[i];
      alphas[i] = 0.0;
    } else if (alphas[i] > eps && (largest < 0 || alphas[i] > alphas[largest])) {
      largest = i;
    }
  }
  if (largest < 0) {
    throw DegenerateModelError("solution has no support vectors");
  }
  if (residual > 0.0) {
    alphas[largest] += residual;
    info = threshold_info(alphas, kernel, penalty);
  }

  std::vector<Eigen::Index> support;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (alphas[i] > eps) support.push_back(i);
  }

  SvddModel model;
  const Eigen::Index k = static_cast<Eigen::Index>(support.size());
  model.support_vectors.resize(k, window.dimension());
  model.alphas.resize(k);
  model.unbounded.resize(static_cast<std::size_t>(k));
  for (Eigen::Index r = 0; r < k; ++r) {
    const Eigen::Index i = support[static_cast<std::size_t>(r)];
    model.support_vectors.row(r) = window.observations.row(i);
    model.alphas[r] = alphas[i];
    model.unbounded[static_cast<std::size_t>(r)] =
        (alphas[i] > eps && alphas[i] < penalty - eps) ? 1 : 0;
  }
  model.threshold_r2 = info.r2;
  model.offset_w = info.offset_w;
  model.center = compute_center(model.alphas, model.support_vectors);
  model.hyper = hyper;
  model.penalty_c = penalty;
  model.column_names = window.column_names;

  if (report) {
    report->iterations = solver.iterations();
    report->kkt_violation = solver.last_violation();
    report->threshold_spread = info.spread;
    report->threshold_fallback = info.fallback;
    report->converged = solver.last_converged();
  }
  return model;
}

double median_pairwise_distance(const ProcessWindow& window) {
  const Eigen::Index n = window.size();
  const Eigen::Index q = window.dimension();
  if (n < 2) {
    throw ValidationError("bandwidth heuristic needs at least two observations");
  }
  std::vector<double> dists;
  dists.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
  const double* base = window.observations.data();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      dists.push_back(std::sqrt(squared_distance(
          {base + i * q, static_cast<std::size_t>(q)},
          {base + j * q, static_cast<std::size_t>(q)})));
    }
  }
  const std::size_t m = dists.size();
  auto mid = dists.begin() + static_cast<std::ptrdiff_t>(m / 2);
  std::nth_element(dists.begin(), mid, dists.end());
  double median = *mid;
  if (m % 2 == 0) {
    auto below = std::max_element(dists.begin(), mid);
    median = (*below + median) / 2.0;
  }
  if (!(median > 0.0)) {
    throw ValidationError("observations are identical; supply an explicit bandwidth");
  }
  return median;
}

}  // namespace svddcap
