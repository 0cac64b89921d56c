#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "radial/radial_sets.hpp"

namespace radial {

/// Closed output interval [lower, upper]; endpoints may be infinite. A rule
/// that does not fire contributes (-inf, +inf).
struct OutputInterval {
  double lower = 0.0;
  double upper = 0.0;

  double midpoint() const { return (lower + upper) / 2.0; }
  bool unbounded() const;
};

/// Intersection of closed intervals: [max lower, min upper] when that is
/// non-empty, std::nullopt otherwise. Throws ValidationError on empty input.
std::optional<OutputInterval> intersect_intervals(
    std::span<const OutputInterval> intervals);

/// Output of a single evaluation. `core` is set for implicative systems only.
struct InferenceResult {
  double output = 0.0;
  std::optional<OutputInterval> core;
  std::vector<double> firing;  // rule firing degrees at the input
};

/// Output interval of rule j at input x: the trivial constraint when the rule
/// does not fire, else [c - d*dist - s, c + d*dist + s] with dist the scaled
/// lp distance of x from the rule's antecedent center.
OutputInterval rule_interval(const RuleBase& rb, std::size_t j,
                             std::span<const double> x);

/// Weighted-average output of a conjunctive system: firing degrees weight the
/// consequent centers. Throws IncompleteInputError when no rule fires,
/// ValidationError on a non-conjunctive rule base.
InferenceResult fs_conjunctive(const RuleBase& rb, std::span<const double> x);

/// Mean-of-maxima output of an implicative system: midpoint of the
/// intersection of the firing rules' output intervals. Throws
/// IncompleteInputError when no rule fires, IncoherentInputError (with the
/// witness pair and intervals) when the intersection is empty, and
/// ValidationError on a non-implicative rule base.
InferenceResult fs_implicative(const RuleBase& rb, std::span<const double> x);

/// Non-throwing status for batch kernels.
enum class PointStatus : std::uint8_t { Ok, NoRuleFires, EmptyCore };

/// Core interval of an implicative evaluation without exceptions: intersects
/// the firing rules' intervals. On EmptyCore, (witness_j, witness_k) is the
/// lexicographically first pair maximizing the gap lower_j - upper_k.
struct CorePoint {
  PointStatus status = PointStatus::Ok;
  double lower = 0.0;
  double upper = 0.0;
  std::uint32_t witness_j = 0;
  std::uint32_t witness_k = 0;
};

CorePoint implicative_core(const RuleBase& rb, std::span<const double> x);

/// Pointwise value of the rule-base relation at (x, y) after the singleton
/// simplification: max of t-norm conjunctions for conjunctive bases, min of
/// residuated implications for implicative ones. Brute-force oracle for
/// cores and the source of curve exports.
double relation_value(const RuleBase& rb, std::span<const double> x, double y);

}  // namespace radial
