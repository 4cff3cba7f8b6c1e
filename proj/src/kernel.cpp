#include "svddcap/kernel.hpp"

#include <cmath>

#include "svddcap/parallel.hpp"

namespace svddcap {

double squared_distance(std::span<const double> x, std::span<const double> y) {
  double acc = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double d = x[j] - y[j];
    acc += d * d;
  }
  return acc;
}

double kernel_eval(const double* x, const double* y, Eigen::Index dim, double bandwidth) {
  const double d2 = squared_distance({x, static_cast<std::size_t>(dim)},
                                     {y, static_cast<std::size_t>(dim)});
  return std::exp(-d2 / (2.0 * bandwidth * bandwidth));
}

double kernel_eval(const Vector& x, const Vector& y, double bandwidth) {
  if (x.size() != y.size()) {
    throw ValidationError("kernel arguments have mismatched dimensions");
  }
  if (x.size() < 1) {
    throw ValidationError("kernel arguments must be non-empty");
  }
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) {
    throw ValidationError("bandwidth must be a positive finite number");
  }
  if (!x.allFinite() || !y.allFinite()) {
    throw ValidationError("kernel arguments contain a non-finite value");
  }
  return kernel_eval(x.data(), y.data(), x.size(), bandwidth);
}

Matrix kernel_matrix(const Matrix& data, double bandwidth) {
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) {
    throw ValidationError("bandwidth must be a positive finite number");
  }
  if (!data.allFinite()) {
    throw ValidationError("kernel matrix input contains a non-finite value");
  }
  const Eigen::Index n = data.rows();
  const Eigen::Index q = data.cols();
  Matrix gram(n, n);
  parallel_chunks(static_cast<std::size_t>(n), max_workers(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const double* xi = data.data() + static_cast<Eigen::Index>(i) * q;
      double* out = gram.data() + static_cast<Eigen::Index>(i) * n;
      for (Eigen::Index j = 0; j < n; ++j) {
        out[j] = kernel_eval(xi, data.data() + j * q, q, bandwidth);
      }
    }
  });
  return gram;
}

}  // namespace svddcap
