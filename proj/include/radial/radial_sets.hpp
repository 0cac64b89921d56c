#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "radial/algebra.hpp"
#include "radial/geometry.hpp"

namespace radial {

/// The shared shape function act: [0,inf) -> [0,1] of a radial system.
/// act(0) = 1, non-increasing, continuous. Two kinds:
///   Cutoff - strictly decreasing on [0, z0], exactly zero from z0 on;
///   Decay  - strictly decreasing everywhere, tends to zero at infinity.
class ActFunction {
public:
  enum class Kind { Cutoff, Decay };

  /// max{0, 1 - z}; cutoff at z0 = 1.
  static ActFunction triangular();
  /// exp(-z^2); strictly positive decay.
  static ActFunction gaussian();
  /// z -> pseudo_inverse(q * z^p) built from an Archimedean t-norm's
  /// generator. Cutoff kind when the generator is bounded (z0 =
  /// (t(0)/q)^(1/p)), decay kind otherwise.
  static ActFunction generated(const TNorm& tnorm, double q, double p);

  double operator()(double z) const;
  Kind kind() const { return kind_; }
  /// z0 for the cutoff kind, +inf for the decay kind.
  double cutoff() const { return cutoff_; }

  /// "triangular" | "gaussian" | "generated" (serialization tag).
  const std::string& family() const { return family_; }
  double q() const { return q_; }
  double shape_exponent() const { return p_; }

private:
  ActFunction() = default;

  Kind kind_ = Kind::Cutoff;
  double cutoff_ = 0.0;
  std::string family_;
  double q_ = 1.0;
  double p_ = 1.0;
  std::function<double(double)> eval_;
};

/// One IF-THEN rule: antecedent center a and widths b on the input axes,
/// consequent center c, width d and plateau half-width s on the output axis.
struct Rule {
  std::vector<double> a;  // antecedent center
  std::vector<double> b;  // antecedent widths, all > 0
  double c = 0.0;         // consequent center
  double d = 1.0;         // consequent width, > 0
  double s = 0.0;         // consequent plateau half-width, >= 0

  std::size_t dim() const { return a.size(); }
  void validate() const;  // throws ValidationError
};

/// Axis-aligned bounding box, one [lo, hi] pair per input axis.
using Box = std::vector<std::array<double, 2>>;

enum class Representation { Conjunctive, Implicative };

/// Outcome of the radial-property sampling check.
struct RadialCheck {
  bool holds = true;
  double max_deviation = 0.0;
  // First sampled violation (empty when the property holds).
  std::vector<double> witness_x;
  std::vector<double> witness_center;
  std::vector<double> witness_widths;
};

/// Monte-Carlo check that the t-norm fold of one-dimensional memberships
/// equals act(scaled lp distance) for the given operator/shape/exponent
/// combination in dimension n. Returns the first violating sample when the
/// identity fails anywhere beyond tol.
RadialCheck verify_radial_property(const TNorm& tnorm, const ActFunction& act,
                                   double norm_p, std::size_t n,
                                   int samples = 256, double tol = 1e-9,
                                   std::uint64_t seed = 0x9e3779b97f4a7c15ull);

/// A validated radial rule base. Immutable after construction; evaluation is
/// pure and safe to call concurrently.
class RuleBase {
public:
  /// Validates rule parameters, dimensions, the box, and (for n >= 2) runs
  /// the radial-property sampling check, throwing ValidationError with the
  /// witness on failure.
  RuleBase(std::vector<Rule> rules, TNorm tnorm, ActFunction act, double norm_p,
           Representation representation, std::optional<Box> input_box = {});

  std::size_t dim() const { return n_; }
  std::size_t size() const { return rules_.size(); }
  const Rule& rule(std::size_t j) const { return rules_[j]; }
  const std::vector<Rule>& rules() const { return rules_; }
  const TNorm& tnorm() const { return tnorm_; }
  const ActFunction& act() const { return act_; }
  double norm_p() const { return norm_p_; }
  Representation representation() const { return representation_; }
  const std::optional<Box>& input_box() const { return input_box_; }

  /// Same rule base under the other representation tag.
  RuleBase with_representation(Representation r) const;

  /// One-dimensional antecedent degree act(|x_i - a_ji| / b_ji).
  double membership_1d(std::size_t j, std::size_t axis, double x_i) const;

  /// Consequent degree act(max{0, |y - c_j| - s_j} / d_j); equals 1 exactly
  /// on the plateau [c_j - s_j, c_j + s_j].
  double consequent(std::size_t j, double y) const;

  /// Rule firing degree via the radial closed form: act of the scaled lp
  /// distance from the rule's center. Canonical evaluation path.
  double antecedent_degree(std::size_t j, std::span<const double> x) const;

  /// The same degree through the t-norm fold of the one-dimensional
  /// memberships. Kept as the independent route for property checks.
  double antecedent_degree_fold(std::size_t j, std::span<const double> x) const;

  /// Scaled lp distance of x from rule j's center.
  double distance(std::size_t j, std::span<const double> x) const;

private:
  RuleBase() = default;

  std::size_t n_ = 0;
  std::vector<Rule> rules_;
  TNorm tnorm_ = TNorm::minimum();
  ActFunction act_ = ActFunction::triangular();
  double norm_p_ = 1.0;
  Representation representation_ = Representation::Conjunctive;
  std::optional<Box> input_box_;
  std::vector<ScaledNorm> norms_;  // one per rule, built at construction
};

/// Rule base on the minimum t-norm. Any act satisfying the shape conditions
/// works; the shared norm exponent is forced to infinity (cubic norm).
RuleBase build_minimum_rulebase(std::vector<Rule> rules, ActFunction act,
                                Representation representation,
                                std::optional<Box> input_box = {});

/// Rule base on a continuous Archimedean t-norm with the induced act
/// z -> pseudo_inverse(q * z^p); the rule base's norm exponent is the same p.
/// Throws ValidationError when the t-norm is the minimum.
RuleBase build_archimedean_rulebase(std::vector<Rule> rules, TNorm tnorm,
                                    double q, double p,
                                    Representation representation,
                                    std::optional<Box> input_box = {});

/// Uniform sampling grid on [lo, hi] with `points` inclusive nodes.
struct GridSpec {
  double lo = 0.0;
  double hi = 1.0;
  int points = 2;

  double pitch() const { return (hi - lo) / (points - 1); }
  double node(int i) const {
    return lo + (hi - lo) * static_cast<double>(i) / (points - 1);
  }
};

/// Sampled alpha-cut of a rule's consequent: the grid nodes y with
/// B_j(y) >= alpha. Brute-force utility for checking interval outputs.
std::vector<double> alpha_cut_1d(const Rule& rule, const ActFunction& act,
                                 double alpha, const GridSpec& grid);

}  // namespace radial
