#pragma once

#include <span>
#include <vector>

namespace radial {

/// True when p encodes the max-norm exponent.
bool is_infinite_exponent(double p);

/// Unscaled lp norm, p in [1, inf]. Guards against overflow by factoring out
/// the largest component before powering.
double lp_norm(double p, std::span<const double> u);

/// An lp norm with per-axis positive scaling: ||u|| = lp_norm(u_i / b_i).
/// p = infinity yields max_i |u_i / b_i|.
class ScaledNorm {
public:
  ScaledNorm(double p, std::vector<double> scales);

  double p() const { return p_; }
  std::size_t dim() const { return scales_.size(); }
  const std::vector<double>& scales() const { return scales_; }

  double operator()(std::span<const double> u) const;

  /// The largest alpha with alpha * lp_norm(u) <= (*this)(u) for all u,
  /// namely 1 / max_i b_i.
  double unscaled_lower_bound_factor() const;

private:
  double p_;
  std::vector<double> scales_;
};

}  // namespace radial
