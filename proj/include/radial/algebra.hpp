#pragma once

#include <functional>
#include <span>
#include <string>

namespace radial {

/// A fuzzy conjunction on [0,1]: commutative, associative, monotone, with
/// unit 1. Either the minimum (which has no additive generator) or a
/// continuous Archimedean t-norm represented by its additive generator
/// t: [0,1] -> [0,inf], strictly decreasing, t(1) = 0.
///
/// Every t-norm carries its residuated implication
///   residuum(a, b) = sup { z in [0,1] : apply(z, a) <= b },
/// evaluated in closed form where one is known and through the generator
/// otherwise. `residuum_by_definition` keeps the sup-search route available
/// as the definitional fallback; the closed forms are checked against it in
/// the test suite.
///
/// Immutable after construction; all operations are pure.
class TNorm {
public:
  enum class Kind { Minimum, Archimedean };

  /// min{a, b}. Not Archimedean; residuum is the Godel implication.
  static TNorm minimum();
  /// a * b, generator t(x) = -ln x; residuum is the Goguen implication.
  static TNorm product();
  /// max{0, a + b - 1}, generator t(x) = 1 - x; Lukasiewicz implication.
  static TNorm lukasiewicz();
  /// "minimum" | "product" | "lukasiewicz".
  static TNorm from_name(const std::string& name);

  /// Custom continuous Archimedean t-norm. `generator` must be continuous
  /// and strictly decreasing with generator(1) = 0; `generator_inverse`
  /// inverts it on [0, generator_at_zero]. An optional closed-form residuum
  /// may be supplied; otherwise the generator form
  /// pseudo_inverse(max{0, t(b) - t(a)}) is used.
  static TNorm archimedean(std::string name,
                           std::function<double(double)> generator,
                           std::function<double(double)> generator_inverse,
                           double generator_at_zero,
                           std::function<double(double, double)> residuum = {});

  Kind kind() const { return kind_; }
  bool is_archimedean() const { return kind_ == Kind::Archimedean; }
  const std::string& name() const { return name_; }

  /// t(x). Archimedean kind only.
  double generator(double x) const;
  /// t(0), possibly +inf (strict generators).
  double generator_at_zero() const;
  /// t^(-1)(min{t(0), z}), mapping [0, inf] onto [0, 1]. Archimedean only.
  double pseudo_inverse(double z) const;

  /// T(a, b).
  double apply(double a, double b) const;

  /// n-ary conjunction. For the Archimedean kind this is a single
  /// pseudo-inversion of the summed generator values, which equals the
  /// pairwise left fold. Throws ValidationError on an empty list.
  double fold(std::span<const double> values) const;

  /// Residuated implication a -> b. Equals 1 iff a <= b.
  double residuum(double a, double b) const;

  /// Brute-force sup over a uniform z-grid of the residuation definition.
  /// Accurate to one grid step; serves as the definitional fallback and as
  /// the oracle for the closed forms.
  double residuum_by_definition(double a, double b, int steps = 10000) const;

private:
  TNorm() = default;

  Kind kind_ = Kind::Minimum;
  std::string name_;
  std::function<double(double)> gen_;
  std::function<double(double)> gen_inv_;
  double gen_at_zero_ = 0.0;
  std::function<double(double, double)> residuum_;
};

/// Maximum s-norm over a non-empty list. Throws ValidationError when empty.
double snorm_max(std::span<const double> values);

}  // namespace radial
