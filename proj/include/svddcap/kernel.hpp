#ifndef SVDDCAP_KERNEL_HPP
#define SVDDCAP_KERNEL_HPP

#include <span>

#include "svddcap/types.hpp"

namespace svddcap {

// Squared Euclidean distance accumulated left-to-right through the
// difference vector. The kernel is never evaluated via the expansion
// |x|^2 - 2 x.y + |y|^2: going through the difference keeps the result
// exactly translation-invariant whenever the shifted coordinates are exact.
double squared_distance(std::span<const double> x, std::span<const double> y);

/// Gaussian kernel exp(-|x - y|^2 / (2 s^2)). Result in (0, 1], equal to 1
/// iff x == y.
double kernel_eval(const Vector& x, const Vector& y, double bandwidth);

/// Raw-pointer form used by the hot loops; `dim` entries per point.
double kernel_eval(const double* x, const double* y, Eigen::Index dim, double bandwidth);

/// Dense n x n Gram matrix with unit diagonal. Rows are filled by
/// independent workers; the result is identical to the sequential
/// computation for any worker count.
Matrix kernel_matrix(const Matrix& data, double bandwidth);

}  // namespace svddcap

#endif  // SVDDCAP_KERNEL_HPP
