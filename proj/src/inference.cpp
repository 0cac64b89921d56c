#include "radial/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "radial/errors.hpp"

namespace radial {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_point(std::span<const double> x) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) os << ", ";
    os << x[i];
  }
  os << "]";
  return os.str();
}

}  // namespace

bool OutputInterval::unbounded() const {
  return std::isinf(lower) || std::isinf(upper);
}

std::optional<OutputInterval> intersect_intervals(
    std::span<const OutputInterval> intervals) {
  if (intervals.empty()) throw ValidationError("empty interval intersection");
  double lo = -kInf;
  double hi = kInf;
  for (const OutputInterval& iv : intervals) {
    lo = std::max(lo, iv.lower);
    hi = std::min(hi, iv.upper);
  }
  if (lo > hi) return std::nullopt;
  return OutputInterval{lo, hi};
}

OutputInterval rule_interval(const RuleBase& rb, std::size_t j,
                             std::span<const double> x) {
  const double dist = rb.distance(j, x);
  if (rb.act()(dist) == 0.0) return OutputInterval{-kInf, kInf};
  const Rule& r = rb.rule(j);
  const double half = r.d * dist + r.s;
  return OutputInterval{r.c - half, r.c + half};
}

InferenceResult fs_conjunctive(const RuleBase& rb, std::span<const double> x) {
  if (rb.representation() != Representation::Conjunctive) {
    throw ValidationError("rule base is not conjunctive");
  }
  InferenceResult res;
  res.firing.resize(rb.size());
  double weight_sum = 0.0;
  double weighted_centers = 0.0;
  for (std::size_t j = 0; j < rb.size(); ++j) {
    const double w = rb.antecedent_degree(j, x);
    res.firing[j] = w;
    weight_sum += w;
    weighted_centers += w * rb.rule(j).c;
  }
  if (weight_sum == 0.0) {
    throw IncompleteInputError(
        "no rule fires (incomplete rule base at x=" + format_point(x) + ")",
        std::vector<double>(x.begin(), x.end()));
  }
  res.output = weighted_centers / weight_sum;
  return res;
}

CorePoint implicative_core(const RuleBase& rb, std::span<const double> x) {
  CorePoint point;
  double max_lower = -kInf;
  double min_upper = kInf;
  std::uint32_t arg_lower = 0;
  std::uint32_t arg_upper = 0;
  bool any_fired = false;
  for (std::size_t j = 0; j < rb.size(); ++j) {
    const double dist = rb.distance(j, x);
    if (rb.act()(dist) == 0.0) continue;
    any_fired = true;
    const Rule& r = rb.rule(j);
    const double half = r.d * dist + r.s;
    if (r.c - half > max_lower) {
      max_lower = r.c - half;
      arg_lower = static_cast<std::uint32_t>(j);
    }
    if (r.c + half < min_upper) {
      min_upper = r.c + half;
      arg_upper = static_cast<std::uint32_t>(j);
    }
  }
  if (!any_fired) {
    point.status = PointStatus::NoRuleFires;
    return point;
  }
  point.lower = max_lower;
  point.upper = min_upper;
  if (max_lower > min_upper) {
    point.status = PointStatus::EmptyCore;
    point.witness_j = arg_lower;
    point.witness_k = arg_upper;
    return point;
  }
  point.status = PointStatus::Ok;
  return point;
}

InferenceResult fs_implicative(const RuleBase& rb, std::span<const double> x) {
  if (rb.representation() != Representation::Implicative) {
    throw ValidationError("rule base is not implicative");
  }
  const CorePoint point = implicative_core(rb, x);
  if (point.status == PointStatus::NoRuleFires) {
    throw IncompleteInputError(
        "incomplete at x=" + format_point(x) + " (core unbounded, MOM undefined)",
        std::vector<double>(x.begin(), x.end()));
  }
  if (point.status == PointStatus::EmptyCore) {
    const OutputInterval wj = rule_interval(rb, point.witness_j, x);
    const OutputInterval wk = rule_interval(rb, point.witness_k, x);
    std::ostringstream os;
    os << "incoherent at x=" << format_point(x) << ", rules "
       << (point.witness_j + 1) << "," << (point.witness_k + 1)
       << ": intervals [" << wj.lower << ", " << wj.upper << "] and ["
       << wk.lower << ", " << wk.upper << "] are disjoint";
    throw IncoherentInputError(os.str(), std::vector<double>(x.begin(), x.end()),
                               point.witness_j, point.witness_k, wj.lower,
                               wj.upper, wk.lower, wk.upper);
  }
  InferenceResult res;
  res.firing.resize(rb.size());
  for (std::size_t j = 0; j < rb.size(); ++j) {
    res.firing[j] = rb.antecedent_degree(j, x);
  }
  res.core = OutputInterval{point.lower, point.upper};
  res.output = res.core->midpoint();
  return res;
}

double relation_value(const RuleBase& rb, std::span<const double> x, double y) {
  const TNorm& tn = rb.tnorm();
  if (rb.representation() == Representation::Conjunctive) {
    double best = 0.0;
    for (std::size_t j = 0; j < rb.size(); ++j) {
      best = std::max(best, tn.apply(rb.antecedent_degree(j, x), rb.consequent(j, y)));
    }
    return best;
  }
  double worst = 1.0;
  for (std::size_t j = 0; j < rb.size(); ++j) {
    worst = std::min(worst, tn.residuum(rb.antecedent_degree(j, x), rb.consequent(j, y)));
  }
  return worst;
}

}  // namespace radial
