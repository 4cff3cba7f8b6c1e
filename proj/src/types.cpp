#include "svddcap/types.hpp"

#include <cmath>
#include <sstream>

namespace svddcap {

namespace {

std::vector<std::string> default_names(Eigen::Index q) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(q));
  for (Eigen::Index j = 0; j < q; ++j) {
    names.push_back("x" + std::to_string(j + 1));
  }
  return names;
}

}  // namespace

ProcessWindow::ProcessWindow(Matrix obs, std::vector<std::string> names)
    : observations(std::move(obs)), column_names(std::move(names)) {
  if (observations.rows() < 1 || observations.cols() < 1) {
    throw ValidationError("process window must have at least one row and one column");
  }
  if (!observations.allFinite()) {
    throw ValidationError("process window contains a non-finite value");
  }
  if (column_names.empty()) {
    column_names = default_names(observations.cols());
  } else if (static_cast<Eigen::Index>(column_names.size()) != observations.cols()) {
    std::ostringstream msg;
    msg << "process window has " << observations.cols() << " columns but "
        << column_names.size() << " column names";
    throw ValidationError(msg.str());
  }
}

SpecLimits::SpecLimits(Vector lsl, Vector usl, std::vector<std::string> limit_names)
    : lower(std::move(lsl)), upper(std::move(usl)), names(std::move(limit_names)) {
  if (lower.size() < 1 || lower.size() != upper.size()) {
    throw ValidationError("specification limits need matching non-empty lsl/usl vectors");
  }
  if (!lower.allFinite() || !upper.allFinite()) {
    throw ValidationError("specification limits contain a non-finite value");
  }
  for (Eigen::Index j = 0; j < lower.size(); ++j) {
    if (!(lower[j] < upper[j])) {
      std::ostringstream msg;
      msg << "specification limits for variable "
          << (j < static_cast<Eigen::Index>(names.size()) ? names[static_cast<std::size_t>(j)]
                                                          : std::to_string(j + 1))
          << " violate lsl < usl";
      throw ValidationError(msg.str());
    }
  }
  if (names.empty()) {
    names = default_names(lower.size());
  } else if (static_cast<Eigen::Index>(names.size()) != lower.size()) {
    throw ValidationError("specification limits have mismatched name count");
  }
}

Vector spec_center(const SpecLimits& spec) {
  return (spec.lower + spec.upper) * 0.5;
}

void HyperParams::validate() const {
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) {
    throw ValidationError("bandwidth must be a positive finite number");
  }
  if (!(outlier_fraction > 0.0) || !(outlier_fraction <= 1.0)) {
    throw ValidationError("outlier fraction must satisfy 0 < f <= 1");
  }
}

void MonteCarloConfig::validate() const {
  if (n_es < 1) {
    throw ValidationError("simulation size n_es must be at least 1");
  }
  if (partitions < 1) {
    throw ValidationError("partition count must be at least 1");
  }
}

}  // namespace svddcap
