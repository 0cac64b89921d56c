#include "radial/batch.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "radial/detail.hpp"
#include "radial/errors.hpp"

namespace radial {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

std::size_t checked_rows(const RuleBase& rb, std::span<const double> inputs) {
  const std::size_t n = rb.dim();
  if (inputs.size() % n != 0) {
    throw ValidationError("flattened input length is not a multiple of the "
                          "rule base dimension");
  }
  return inputs.size() / n;
}

void eval_row(const RuleBase& rb, std::span<const double> x, double& out,
              PointStatus& status) {
  if (rb.representation() == Representation::Conjunctive) {
    double weight_sum = 0.0;
    double weighted = 0.0;
    for (std::size_t j = 0; j < rb.size(); ++j) {
      const double w = rb.antecedent_degree(j, x);
      weight_sum += w;
      weighted += w * rb.rule(j).c;
    }
    if (weight_sum == 0.0) {
      out = kNaN;
      status = PointStatus::NoRuleFires;
      return;
    }
    out = weighted / weight_sum;
    status = PointStatus::Ok;
    return;
  }
  const CorePoint point = implicative_core(rb, x);
  status = point.status;
  out = point.status == PointStatus::Ok ? (point.lower + point.upper) / 2.0 : kNaN;
}

std::uint64_t checked_cells(const RuleBase& rb, const Box& box,
                            const std::vector<int>& resolution) {
  if (box.size() != rb.dim()) {
    throw ValidationError("box dimension differs from the rule base's");
  }
  if (resolution.size() != rb.dim()) {
    throw ValidationError("resolution must give one entry per axis");
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < resolution.size(); ++i) {
    if (resolution[i] < 2) throw ValidationError("resolution must be >= 2 per axis");
    if (!(box[i][0] < box[i][1])) {
      throw ValidationError("box must have positive extent");
    }
    total *= static_cast<std::uint64_t>(resolution[i]);
  }
  return total;
}

// Row-major decode: axis 0 varies slowest.
void decode_cell(std::uint64_t idx, const Box& box,
                 const std::vector<int>& resolution, double* x) {
  for (std::size_t i = resolution.size(); i-- > 0;) {
    const std::uint64_t r = static_cast<std::uint64_t>(resolution[i]);
    const std::uint64_t coord = idx % r;
    idx /= r;
    x[i] = box[i][0] + (box[i][1] - box[i][0]) * static_cast<double>(coord) /
                           static_cast<double>(resolution[i] - 1);
  }
}

double max_firing(const RuleBase& rb, std::span<const double> x) {
  double best = 0.0;
  for (std::size_t j = 0; j < rb.size(); ++j) {
    best = std::max(best, rb.antecedent_degree(j, x));
  }
  return best;
}

void sample_in_box(const Box& box, std::uint64_t index, std::uint64_t seed,
                   double* x) {
  detail::SplitMix64 rng = detail::SplitMix64::for_index(seed, index);
  for (std::size_t i = 0; i < box.size(); ++i) {
    x[i] = rng.uniform(box[i][0], box[i][1]);
  }
}

double radial_sample_range(const ActFunction& act) {
  return act.kind() == ActFunction::Kind::Cutoff ? 1.2 * act.cutoff() : 2.0;
}

double radial_deviation_at(const TNorm& tnorm, const ActFunction& act,
                           const ScaledNorm& norm, const RadialSample& sample,
                           double* scratch) {
  const std::size_t n = sample.x.size();
  for (std::size_t i = 0; i < n; ++i) {
    scratch[i] = act(std::abs(sample.x[i] - sample.center[i]) / sample.widths[i]);
  }
  const double folded = tnorm.fold(std::span<const double>(scratch, n));
  for (std::size_t i = 0; i < n; ++i) scratch[i] = sample.x[i] - sample.center[i];
  const double closed = act(norm(std::span<const double>(scratch, n)));
  return std::abs(folded - closed);
}

}  // namespace

BatchResult batch_eval_serial(const RuleBase& rb, std::span<const double> inputs) {
  const std::size_t rows = checked_rows(rb, inputs);
  const std::size_t n = rb.dim();
  BatchResult res;
  res.outputs.resize(rows);
  res.status.resize(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    eval_row(rb, inputs.subspan(i * n, n), res.outputs[i], res.status[i]);
  }
  return res;
}

BatchResult batch_eval_parallel(const RuleBase& rb, std::span<const double> inputs) {
  const std::size_t rows = checked_rows(rb, inputs);
  const std::size_t n = rb.dim();
  BatchResult res;
  res.outputs.resize(rows);
  res.status.resize(rows);
  const long long count = static_cast<long long>(rows);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i) {
    eval_row(rb, inputs.subspan(static_cast<std::size_t>(i) * n, n),
             res.outputs[static_cast<std::size_t>(i)],
             res.status[static_cast<std::size_t>(i)]);
  }
  return res;
}

BatchResult batch_eval(const RuleBase& rb, std::span<const double> inputs) {
  return batch_eval_parallel(rb, inputs);
}

GridMin grid_min_max_firing_serial(const RuleBase& rb, const Box& box,
                                   const std::vector<int>& resolution) {
  const std::uint64_t total = checked_cells(rb, box, resolution);
  const std::size_t n = rb.dim();
  std::vector<double> x(n);
  GridMin best;
  best.value = kInf;
  best.cell_index = total;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode_cell(idx, box, resolution, x.data());
    const double v = max_firing(rb, x);
    if (v < best.value) {
      best.value = v;
      best.cell_index = idx;
    }
  }
  best.argmin.resize(n);
  decode_cell(best.cell_index, box, resolution, best.argmin.data());
  return best;
}

GridMin grid_min_max_firing_parallel(const RuleBase& rb, const Box& box,
                                     const std::vector<int>& resolution) {
  const std::uint64_t total = checked_cells(rb, box, resolution);
  const std::size_t n = rb.dim();
  GridMin best;
  best.value = kInf;
  best.cell_index = total;
  const long long count = static_cast<long long>(total);
#pragma omp parallel
  {
    std::vector<double> x(n);
    double local_value = kInf;
    std::uint64_t local_index = total;
#pragma omp for schedule(static) nowait
    for (long long i = 0; i < count; ++i) {
      const std::uint64_t idx = static_cast<std::uint64_t>(i);
      decode_cell(idx, box, resolution, x.data());
      const double v = max_firing(rb, x);
      if (v < local_value || (v == local_value && idx < local_index)) {
        local_value = v;
        local_index = idx;
      }
    }
#pragma omp critical
    {
      if (local_value < best.value ||
          (local_value == best.value && local_index < best.cell_index)) {
        best.value = local_value;
        best.cell_index = local_index;
      }
    }
  }
  best.argmin.resize(n);
  decode_cell(best.cell_index, box, resolution, best.argmin.data());
  return best;
}

GridMin grid_min_max_firing(const RuleBase& rb, const Box& box,
                            const std::vector<int>& resolution) {
  return grid_min_max_firing_parallel(rb, box, resolution);
}

IncoherenceScan incoherence_scan_serial(const RuleBase& rb, const Box& box,
                                        std::uint64_t samples, std::uint64_t seed) {
  if (box.size() != rb.dim()) {
    throw ValidationError("box dimension differs from the rule base's");
  }
  const std::size_t n = rb.dim();
  std::vector<double> x(n);
  IncoherenceScan scan;
  for (std::uint64_t i = 0; i < samples; ++i) {
    sample_in_box(box, i, seed, x.data());
    const CorePoint point = implicative_core(rb, x);
    if (point.status == PointStatus::EmptyCore) {
      scan.found = true;
      scan.sample_index = i;
      scan.x = x;
      scan.rule_j = point.witness_j;
      scan.rule_k = point.witness_k;
      return scan;
    }
  }
  return scan;
}

IncoherenceScan incoherence_scan_parallel(const RuleBase& rb, const Box& box,
                                          std::uint64_t samples, std::uint64_t seed) {
  if (box.size() != rb.dim()) {
    throw ValidationError("box dimension differs from the rule base's");
  }
  const std::size_t n = rb.dim();
  std::uint64_t winner = samples;
  std::uint32_t winner_j = 0;
  std::uint32_t winner_k = 0;
  const long long count = static_cast<long long>(samples);
#pragma omp parallel
  {
    std::vector<double> x(n);
    std::uint64_t local_winner = samples;
    std::uint32_t local_j = 0;
    std::uint32_t local_k = 0;
#pragma omp for schedule(static) nowait
    for (long long i = 0; i < count; ++i) {
      const std::uint64_t idx = static_cast<std::uint64_t>(i);
      if (idx >= local_winner) continue;
      sample_in_box(box, idx, seed, x.data());
      const CorePoint point = implicative_core(rb, x);
      if (point.status == PointStatus::EmptyCore && idx < local_winner) {
        local_winner = idx;
        local_j = point.witness_j;
        local_k = point.witness_k;
      }
    }
#pragma omp critical
    {
      if (local_winner < winner) {
        winner = local_winner;
        winner_j = local_j;
        winner_k = local_k;
      }
    }
  }
  IncoherenceScan scan;
  if (winner < samples) {
    scan.found = true;
    scan.sample_index = winner;
    scan.x.resize(n);
    sample_in_box(box, winner, seed, scan.x.data());
    scan.rule_j = winner_j;
    scan.rule_k = winner_k;
  }
  return scan;
}

IncoherenceScan incoherence_scan(const RuleBase& rb, const Box& box,
                                 std::uint64_t samples, std::uint64_t seed) {
  return incoherence_scan_parallel(rb, box, samples, seed);
}

RadialSample regenerate_radial_sample(const ActFunction& act, std::size_t n,
                                      std::uint64_t index, std::uint64_t seed) {
  detail::SplitMix64 rng = detail::SplitMix64::for_index(seed, index);
  const double range = radial_sample_range(act);
  RadialSample sample;
  sample.center.resize(n);
  sample.widths.resize(n);
  sample.x.resize(n);
  for (std::size_t i = 0; i < n; ++i) sample.center[i] = rng.uniform(-1.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) sample.widths[i] = rng.uniform(0.5, 2.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.uniform(-range, range);
    sample.x[i] = sample.center[i] + sample.widths[i] * u;
  }
  return sample;
}

RadialScan radial_deviation_scan_serial(const TNorm& tnorm, const ActFunction& act,
                                        double norm_p, std::size_t n, int samples,
                                        double tol, std::uint64_t seed) {
  if (n < 1) throw ValidationError("radial scan needs dimension >= 1");
  (void)ScaledNorm(norm_p, {1.0});  // validate the exponent up front
  RadialScan scan;
  std::vector<double> scratch(n);
  for (int i = 0; i < samples; ++i) {
    const RadialSample sample =
        regenerate_radial_sample(act, n, static_cast<std::uint64_t>(i), seed);
    const ScaledNorm norm(norm_p, sample.widths);
    const double dev = radial_deviation_at(tnorm, act, norm, sample, scratch.data());
    if (dev > scan.max_deviation) {
      scan.max_deviation = dev;
      scan.max_index = i;
    }
    if (dev > tol && scan.first_violation < 0) scan.first_violation = i;
  }
  return scan;
}

RadialScan radial_deviation_scan_parallel(const TNorm& tnorm, const ActFunction& act,
                                          double norm_p, std::size_t n, int samples,
                                          double tol, std::uint64_t seed) {
  RadialScan scan;
#pragma omp parallel
  {
    std::vector<double> scratch(n);
    double local_max = 0.0;
    long long local_max_idx = -1;
    long long local_first = -1;
#pragma omp for schedule(static) nowait
    for (int i = 0; i < samples; ++i) {
      const RadialSample sample =
          regenerate_radial_sample(act, n, static_cast<std::uint64_t>(i), seed);
      const ScaledNorm norm(norm_p, sample.widths);
      const double dev = radial_deviation_at(tnorm, act, norm, sample, scratch.data());
      if (dev > local_max || (dev == local_max && local_max_idx > i)) {
        local_max = dev;
        local_max_idx = i;
      }
      if (dev > tol && (local_first < 0 || i < local_first)) local_first = i;
    }
#pragma omp critical
    {
      if (local_max > scan.max_deviation ||
          (local_max == scan.max_deviation && local_max_idx >= 0 &&
           (scan.max_index < 0 || local_max_idx < scan.max_index))) {
        scan.max_deviation = local_max;
        scan.max_index = local_max_idx;
      }
      if (local_first >= 0 &&
          (scan.first_violation < 0 || local_first < scan.first_violation)) {
        scan.first_violation = local_first;
      }
    }
  }
  return scan;
}

RadialScan radial_deviation_scan(const TNorm& tnorm, const ActFunction& act,
                                 double norm_p, std::size_t n, int samples,
                                 double tol, std::uint64_t seed) {
  return radial_deviation_scan_parallel(tnorm, act, norm_p, n, samples, tol, seed);
}

}  // namespace radial
