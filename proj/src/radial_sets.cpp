#include "radial/radial_sets.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "radial/batch.hpp"
#include "radial/errors.hpp"

namespace radial {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_vector(std::span<const double> v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << "]";
  return os.str();
}

}  // namespace

ActFunction ActFunction::triangular() {
  ActFunction act;
  act.kind_ = Kind::Cutoff;
  act.cutoff_ = 1.0;
  act.family_ = "triangular";
  act.q_ = 1.0;
  act.p_ = 1.0;
  act.eval_ = [](double z) { return std::max(0.0, 1.0 - z); };
  return act;
}

ActFunction ActFunction::gaussian() {
  ActFunction act;
  act.kind_ = Kind::Decay;
  act.cutoff_ = kInf;
  act.family_ = "gaussian";
  act.q_ = 1.0;
  act.p_ = 2.0;
  act.eval_ = [](double z) { return std::exp(-z * z); };
  return act;
}

ActFunction ActFunction::generated(const TNorm& tnorm, double q, double p) {
  if (!tnorm.is_archimedean()) {
    throw ValidationError("not Archimedean: the minimum t-norm has no generator "
                          "to induce a shape function from");
  }
  if (!(q > 0.0)) throw ValidationError("shape parameter q must be positive");
  if (!(p >= 1.0) || std::isinf(p)) {
    throw ValidationError("shape exponent p must lie in [1, inf)");
  }
  ActFunction act;
  const double t0 = tnorm.generator_at_zero();
  if (std::isinf(t0)) {
    act.kind_ = Kind::Decay;
    act.cutoff_ = kInf;
  } else {
    act.kind_ = Kind::Cutoff;
    act.cutoff_ = std::pow(t0 / q, 1.0 / p);
  }
  act.family_ = "generated";
  act.q_ = q;
  act.p_ = p;
  if (p == 1.0) {
    act.eval_ = [tnorm, q](double z) { return tnorm.pseudo_inverse(q * z); };
  } else if (p == 2.0) {
    act.eval_ = [tnorm, q](double z) { return tnorm.pseudo_inverse(q * z * z); };
  } else {
    act.eval_ = [tnorm, q, p](double z) {
      return tnorm.pseudo_inverse(q * std::pow(z, p));
    };
  }
  return act;
}

double ActFunction::operator()(double z) const { return eval_(z); }

void Rule::validate() const {
  if (a.empty()) throw ValidationError("rule has no input axes");
  if (a.size() != b.size()) {
    throw ValidationError("rule center and widths disagree in dimension");
  }
  for (double bi : b) {
    if (!(bi > 0.0)) throw ValidationError("widths must be positive");
  }
  if (!(d > 0.0)) throw ValidationError("consequent width must be positive");
  if (!(s >= 0.0)) throw ValidationError("plateau half-width must be non-negative");
}

RadialCheck verify_radial_property(const TNorm& tnorm, const ActFunction& act,
                                   double norm_p, std::size_t n, int samples,
                                   double tol, std::uint64_t seed) {
  if (n < 2) throw ValidationError("radial property check needs dimension >= 2");
  if (samples < 1) throw ValidationError("radial property check needs samples >= 1");

  const RadialScan scan =
      radial_deviation_scan(tnorm, act, norm_p, n, samples, tol, seed);

  RadialCheck check;
  check.max_deviation = scan.max_deviation;
  check.holds = scan.first_violation < 0;
  if (!check.holds) {
    RadialSample sample = regenerate_radial_sample(
        act, n, static_cast<std::uint64_t>(scan.first_violation), seed);
    check.witness_x = std::move(sample.x);
    check.witness_center = std::move(sample.center);
    check.witness_widths = std::move(sample.widths);
  }
  return check;
}

RuleBase::RuleBase(std::vector<Rule> rules, TNorm tnorm, ActFunction act,
                   double norm_p, Representation representation,
                   std::optional<Box> input_box)
    : rules_(std::move(rules)),
      tnorm_(std::move(tnorm)),
      act_(std::move(act)),
      norm_p_(norm_p),
      representation_(representation),
      input_box_(std::move(input_box)) {
  if (rules_.empty()) throw ValidationError("rule base needs at least one rule");
  n_ = rules_.front().dim();
  for (const Rule& r : rules_) {
    r.validate();
    if (r.dim() != n_) {
      throw ValidationError("all rules must share the input dimension");
    }
  }
  if (!(norm_p_ >= 1.0) && !is_infinite_exponent(norm_p_)) {
    throw ValidationError("norm exponent must lie in [1, inf]");
  }
  if (input_box_) {
    if (input_box_->size() != n_) {
      throw ValidationError("input box dimension differs from the rules'");
    }
    for (const auto& [lo, hi] : *input_box_) {
      if (!(lo < hi)) throw ValidationError("input box must have positive extent");
    }
  }
  norms_.reserve(rules_.size());
  for (const Rule& r : rules_) norms_.emplace_back(norm_p_, r.b);

  // Guard user-supplied operator/shape combinations. The builders always
  // pass, so the cost is one small sampling run per construction.
  if (n_ >= 2) {
    const RadialCheck check = verify_radial_property(tnorm_, act_, norm_p_, n_);
    if (!check.holds) {
      throw ValidationError(
          "t-norm \"" + tnorm_.name() + "\", act family \"" + act_.family() +
          "\" and the given norm exponent do not form a radial system: "
          "fold and closed form differ by " + std::to_string(check.max_deviation) +
          " at x=" + format_vector(check.witness_x) +
          ", center=" + format_vector(check.witness_center) +
          ", widths=" + format_vector(check.witness_widths));
    }
  }
}

RuleBase RuleBase::with_representation(Representation r) const {
  RuleBase copy = *this;
  copy.representation_ = r;
  return copy;
}

double RuleBase::membership_1d(std::size_t j, std::size_t axis, double x_i) const {
  if (j >= rules_.size()) throw ValidationError("rule index out of range");
  if (axis >= n_) throw ValidationError("axis index out of range");
  const Rule& r = rules_[j];
  return act_(std::abs(x_i - r.a[axis]) / r.b[axis]);
}

double RuleBase::consequent(std::size_t j, double y) const {
  if (j >= rules_.size()) throw ValidationError("rule index out of range");
  const Rule& r = rules_[j];
  return act_(std::max(0.0, std::abs(y - r.c) - r.s) / r.d);
}

double RuleBase::distance(std::size_t j, std::span<const double> x) const {
  if (j >= rules_.size()) throw ValidationError("rule index out of range");
  if (x.size() != n_) {
    throw ValidationError("dimension mismatch: input has " +
                          std::to_string(x.size()) + " axes, rule base expects " +
                          std::to_string(n_));
  }
  const Rule& r = rules_[j];
  double scratch[8];
  std::vector<double> heap;
  double* diff = scratch;
  if (n_ > 8) {
    heap.resize(n_);
    diff = heap.data();
  }
  for (std::size_t i = 0; i < n_; ++i) diff[i] = x[i] - r.a[i];
  return norms_[j](std::span<const double>(diff, n_));
}

double RuleBase::antecedent_degree(std::size_t j, std::span<const double> x) const {
  return act_(distance(j, x));
}

double RuleBase::antecedent_degree_fold(std::size_t j,
                                        std::span<const double> x) const {
  if (j >= rules_.size()) throw ValidationError("rule index out of range");
  if (x.size() != n_) throw ValidationError("dimension mismatch");
  const Rule& r = rules_[j];
  double scratch[8];
  std::vector<double> heap;
  double* degrees = scratch;
  if (n_ > 8) {
    heap.resize(n_);
    degrees = heap.data();
  }
  for (std::size_t i = 0; i < n_; ++i) {
    degrees[i] = act_(std::abs(x[i] - r.a[i]) / r.b[i]);
  }
  return tnorm_.fold(std::span<const double>(degrees, n_));
}

RuleBase build_minimum_rulebase(std::vector<Rule> rules, ActFunction act,
                                Representation representation,
                                std::optional<Box> input_box) {
  return RuleBase(std::move(rules), TNorm::minimum(), std::move(act), kInf,
                  representation, std::move(input_box));
}

RuleBase build_archimedean_rulebase(std::vector<Rule> rules, TNorm tnorm,
                                    double q, double p,
                                    Representation representation,
                                    std::optional<Box> input_box) {
  if (!tnorm.is_archimedean()) {
    throw ValidationError("not Archimedean: use build_minimum_rulebase for the "
                          "minimum t-norm");
  }
  ActFunction act = ActFunction::generated(tnorm, q, p);
  return RuleBase(std::move(rules), std::move(tnorm), std::move(act), p,
                  representation, std::move(input_box));
}

std::vector<double> alpha_cut_1d(const Rule& rule, const ActFunction& act,
                                 double alpha, const GridSpec& grid) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ValidationError("alpha must lie in [0, 1]");
  }
  if (grid.points < 2) throw ValidationError("grid needs at least two points");
  rule.validate();
  std::vector<double> cut;
  for (int i = 0; i < grid.points; ++i) {
    const double y = grid.node(i);
    const double degree = act(std::max(0.0, std::abs(y - rule.c) - rule.s) / rule.d);
    if (degree >= alpha) cut.push_back(y);
  }
  return cut;
}

}  // namespace radial
