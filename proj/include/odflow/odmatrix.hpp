#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "odflow/common.hpp"

namespace odflow {

// Dense origin-destination flow matrix. Row i holds the flows leaving
// region_ids[i]; the diagonal (intra-region commuting) is a valid entry.
class ODMatrix {
 public:
  ODMatrix() = default;

  ODMatrix(std::vector<std::string> region_ids, std::vector<double> flows)
      : region_ids_(std::move(region_ids)), flows_(std::move(flows)) {
    const std::size_t n = region_ids_.size();
    if (flows_.size() != n * n)
      throw ShapeError("ODMatrix: flow buffer size does not match region count");
    for (const double f : flows_) {
      if (!std::isfinite(f) || f < 0.0)
        throw DomainError("ODMatrix: flows must be finite and non-negative");
    }
  }

  static ODMatrix zeros(std::vector<std::string> region_ids) {
    const std::size_t n = region_ids.size();
    return ODMatrix(std::move(region_ids), std::vector<double>(n * n, 0.0));
  }

  std::size_t size() const { return region_ids_.size(); }
  const std::vector<std::string>& region_ids() const { return region_ids_; }
  const std::vector<double>& flows() const { return flows_; }

  double operator()(std::size_t i, std::size_t j) const {
    return flows_[i * size() + j];
  }
  double& at(std::size_t i, std::size_t j) { return flows_[i * size() + j]; }

  // Reorders rows/columns to the given region order, which must be a
  // permutation of the current ids.
  ODMatrix aligned_to(const std::vector<std::string>& order) const;

 private:
  std::vector<std::string> region_ids_;
  std::vector<double> flows_;  // row-major N*N
};

inline ODMatrix ODMatrix::aligned_to(const std::vector<std::string>& order) const {
  const std::size_t n = size();
  if (order.size() != n)
    throw DomainError("ODMatrix::aligned_to: region count mismatch");
  std::vector<std::size_t> idx(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t found = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (region_ids_[i] == order[k]) {
        found = i;
        break;
      }
    }
    if (found == n)
      throw DomainError("ODMatrix::aligned_to: unknown region id '" + order[k] + "'");
    idx[k] = found;
  }
  std::vector<double> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = (*this)(idx[i], idx[j]);
  return ODMatrix(order, std::move(out));
}

}  // namespace odflow
