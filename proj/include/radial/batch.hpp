#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "radial/inference.hpp"
#include "radial/radial_sets.hpp"

namespace radial {

// Data-parallel kernels. Each kernel ships in two variants: a serial
// reference implementation and an OpenMP one. Both produce identical results
// (reductions break ties on the smallest index, random draws are
// counter-based per sample), so the serial variant doubles as the oracle for
// the parallel one. The unsuffixed functions are the production entry points
// and forward to the OpenMP variant.

/// Batch evaluation of a rule base over row-major flattened inputs
/// (size = rows * rb.dim()). Outputs hold NaN where status != Ok.
struct BatchResult {
  std::vector<double> outputs;
  std::vector<PointStatus> status;
};

BatchResult batch_eval_serial(const RuleBase& rb, std::span<const double> inputs);
BatchResult batch_eval_parallel(const RuleBase& rb, std::span<const double> inputs);
BatchResult batch_eval(const RuleBase& rb, std::span<const double> inputs);

/// Minimum over a rectangular grid of the best firing degree max_j A_j(x).
struct GridMin {
  double value = 0.0;
  std::vector<double> argmin;
  std::uint64_t cell_index = 0;  // linear index; smallest among ties
};

GridMin grid_min_max_firing_serial(const RuleBase& rb, const Box& box,
                                   const std::vector<int>& resolution);
GridMin grid_min_max_firing_parallel(const RuleBase& rb, const Box& box,
                                     const std::vector<int>& resolution);
GridMin grid_min_max_firing(const RuleBase& rb, const Box& box,
                            const std::vector<int>& resolution);

/// Random search for an input whose implicative core is empty. Reports the
/// smallest violating sample index (thread-count independent).
struct IncoherenceScan {
  bool found = false;
  std::uint64_t sample_index = 0;
  std::vector<double> x;
  std::uint32_t rule_j = 0;
  std::uint32_t rule_k = 0;
};

IncoherenceScan incoherence_scan_serial(const RuleBase& rb, const Box& box,
                                        std::uint64_t samples, std::uint64_t seed);
IncoherenceScan incoherence_scan_parallel(const RuleBase& rb, const Box& box,
                                          std::uint64_t samples, std::uint64_t seed);
IncoherenceScan incoherence_scan(const RuleBase& rb, const Box& box,
                                 std::uint64_t samples, std::uint64_t seed);

/// Sampled deviation between the t-norm fold of one-dimensional memberships
/// and act(scaled lp distance). first_violation is -1 when every sample stays
/// within tol.
struct RadialScan {
  double max_deviation = 0.0;
  long long max_index = -1;
  long long first_violation = -1;
};

/// The (x, center, widths) triple of scan sample `index` (draws are
/// counter-based, so any sample can be rebuilt after the fact).
struct RadialSample {
  std::vector<double> x;
  std::vector<double> center;
  std::vector<double> widths;
};

RadialSample regenerate_radial_sample(const ActFunction& act, std::size_t n,
                                      std::uint64_t index, std::uint64_t seed);

RadialScan radial_deviation_scan_serial(const TNorm& tnorm, const ActFunction& act,
                                        double norm_p, std::size_t n, int samples,
                                        double tol, std::uint64_t seed);
RadialScan radial_deviation_scan_parallel(const TNorm& tnorm, const ActFunction& act,
                                          double norm_p, std::size_t n, int samples,
                                          double tol, std::uint64_t seed);
RadialScan radial_deviation_scan(const TNorm& tnorm, const ActFunction& act,
                                 double norm_p, std::size_t n, int samples,
                                 double tol, std::uint64_t seed);

}  // namespace radial
