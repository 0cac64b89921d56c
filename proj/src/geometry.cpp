#include "radial/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "radial/errors.hpp"

namespace radial {

bool is_infinite_exponent(double p) { return std::isinf(p) && p > 0.0; }

double lp_norm(double p, std::span<const double> u) {
  if (u.empty()) return 0.0;
  double largest = 0.0;
  for (double v : u) largest = std::max(largest, std::abs(v));
  if (largest == 0.0) return 0.0;
  if (is_infinite_exponent(p)) return largest;
  if (p == 1.0) {
    double sum = 0.0;
    for (double v : u) sum += std::abs(v);
    return sum;
  }
  if (p == 2.0) {
    double sum = 0.0;
    for (double v : u) {
      const double r = v / largest;
      sum += r * r;
    }
    return largest * std::sqrt(sum);
  }
  double sum = 0.0;
  for (double v : u) sum += std::pow(std::abs(v) / largest, p);
  return largest * std::pow(sum, 1.0 / p);
}

ScaledNorm::ScaledNorm(double p, std::vector<double> scales)
    : p_(p), scales_(std::move(scales)) {
  if (!(p >= 1.0) && !is_infinite_exponent(p)) {
    throw ValidationError("norm exponent must lie in [1, inf]");
  }
  if (scales_.empty()) throw ValidationError("scaled norm needs at least one axis");
  for (double b : scales_) {
    if (!(b > 0.0)) throw ValidationError("widths must be positive");
  }
}

double ScaledNorm::operator()(std::span<const double> u) const {
  if (u.size() != scales_.size()) {
    throw ValidationError("dimension mismatch: vector has " +
                          std::to_string(u.size()) + " axes, norm expects " +
                          std::to_string(scales_.size()));
  }
  if (is_infinite_exponent(p_)) {
    double m = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      m = std::max(m, std::abs(u[i] / scales_[i]));
    }
    return m;
  }
  double scratch[8];
  std::vector<double> heap;
  double* scaled = scratch;
  if (u.size() > 8) {
    heap.resize(u.size());
    scaled = heap.data();
  }
  for (std::size_t i = 0; i < u.size(); ++i) scaled[i] = u[i] / scales_[i];
  return lp_norm(p_, std::span<const double>(scaled, u.size()));
}

double ScaledNorm::unscaled_lower_bound_factor() const {
  return 1.0 / *std::max_element(scales_.begin(), scales_.end());
}

}  // namespace radial
