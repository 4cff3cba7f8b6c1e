#ifndef SVDDCAP_TYPES_HPP
#define SVDDCAP_TYPES_HPP

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace svddcap {

// Observations are stored row-major: one observation per row, one process
// variable per column. Row-major keeps rows contiguous for the kernel loops
// and maps onto C-contiguous numpy arrays without copies.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

/// Invalid inputs, dimension mismatches, malformed files.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filesystem and stream failures.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dual solver hit its iteration budget before reaching tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every support vector sits at the penalty bound, so no boundary threshold
/// can be read off the solution. Usually cured by lowering the outlier
/// fraction.
class DegenerateModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Monte Carlo sample found no inlier inside the specification box.
class EmptyIntersectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An in-control window of process measurements: n observations of q
/// variables. Entries must be finite and n, q >= 1.
struct ProcessWindow {
  Matrix observations;
  std::vector<std::string> column_names;

  ProcessWindow(Matrix obs, std::vector<std::string> names = {});

  Eigen::Index size() const { return observations.rows(); }
  Eigen::Index dimension() const { return observations.cols(); }
};

/// Per-variable engineering specification limits [lsl_j, usl_j], lsl < usl
/// strictly. The specification center is the vector of interval midpoints.
struct SpecLimits {
  Vector lower;
  Vector upper;
  std::vector<std::string> names;

  SpecLimits(Vector lsl, Vector usl, std::vector<std::string> names = {});

  Eigen::Index dimension() const { return lower.size(); }
};

/// Midpoints (lsl_j + usl_j) / 2.
Vector spec_center(const SpecLimits& spec);

/// Gaussian bandwidth s and expected outlier fraction f. The dual box bound
/// C = 1/(n f) is derived per training window; f <= 1 keeps it feasible.
struct HyperParams {
  double bandwidth = 0.0;
  double outlier_fraction = 1e-6;

  void validate() const;
  double penalty(Eigen::Index n) const { return 1.0 / (static_cast<double>(n) * outlier_fraction); }
};

/// Trained data description: support vectors with their Lagrange
/// coefficients, the feature-space threshold R^2, the input-space center
/// a = sum_i alpha_i x_i, and the constant offset_w = sum_ij alpha_i alpha_j
/// K(x_i, x_j) reused by every scoring call.
struct SvddModel {
  Matrix support_vectors;              // k x q
  Vector alphas;                       // k, each in (eps_bound, C + eps_bound]
  std::vector<std::uint8_t> unbounded; // k, 1 <=> eps_bound < alpha < C - eps_bound
  double threshold_r2 = 0.0;
  Vector center;                       // q
  double offset_w = 0.0;
  HyperParams hyper;
  double penalty_c = 0.0;
  std::vector<std::string> column_names;

  Eigen::Index support_count() const { return support_vectors.rows(); }
  Eigen::Index dimension() const { return support_vectors.cols(); }
};

// Bound-classification slack: solver output is inexact, so alpha = 0 /
// interior / alpha = C are decided within eps_bound(C) = 1e-8 * C.
inline double eps_bound(double penalty_c) { return 1e-8 * penalty_c; }

/// Monte Carlo sampling contract. The sampled values depend only on
/// (seed, n_es); `partitions` is a worker-count hint and never changes the
/// draws (see capability.hpp).
struct MonteCarloConfig {
  std::uint64_t n_es = 0;
  std::uint64_t seed = 0;
  std::uint32_t partitions = 1;

  void validate() const;
};

/// The capability vector [Cp, dist, p] plus Monte Carlo diagnostics.
/// standard_error is a delta-method diagnostic for Cp, not a component of
/// the vector itself.
struct CapabilityVector {
  double cp = 0.0;
  double dist = 0.0;
  double p = 0.0;
  std::uint64_t n_es = 0;
  std::uint64_t count_1 = 0;
  double standard_error = 0.0;
};

}  // namespace svddcap

#endif  // SVDDCAP_TYPES_HPP
