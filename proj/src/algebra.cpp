#include "radial/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "radial/errors.hpp"

namespace radial {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TNorm TNorm::minimum() {
  TNorm tn;
  tn.kind_ = Kind::Minimum;
  tn.name_ = "minimum";
  // Godel implication.
  tn.residuum_ = [](double a, double b) { return a <= b ? 1.0 : b; };
  return tn;
}

TNorm TNorm::product() {
  TNorm tn;
  tn.kind_ = Kind::Archimedean;
  tn.name_ = "product";
  tn.gen_ = [](double x) { return -std::log(x); };
  tn.gen_inv_ = [](double z) { return std::exp(-z); };
  tn.gen_at_zero_ = kInf;
  // Goguen implication.
  tn.residuum_ = [](double a, double b) { return a <= b ? 1.0 : b / a; };
  return tn;
}

TNorm TNorm::lukasiewicz() {
  TNorm tn;
  tn.kind_ = Kind::Archimedean;
  tn.name_ = "lukasiewicz";
  tn.gen_ = [](double x) { return 1.0 - x; };
  tn.gen_inv_ = [](double z) { return 1.0 - z; };
  tn.gen_at_zero_ = 1.0;
  tn.residuum_ = [](double a, double b) {
    return a <= b ? 1.0 : 1.0 - a + b;
  };
  return tn;
}

TNorm TNorm::from_name(const std::string& name) {
  if (name == "minimum") return minimum();
  if (name == "product") return product();
  if (name == "lukasiewicz") return lukasiewicz();
  throw ValidationError("unknown t-norm \"" + name +
                        "\" (known: minimum, product, lukasiewicz)");
}

TNorm TNorm::archimedean(std::string name,
                         std::function<double(double)> generator,
                         std::function<double(double)> generator_inverse,
                         double generator_at_zero,
                         std::function<double(double, double)> residuum) {
  if (!generator || !generator_inverse) {
    throw ValidationError("archimedean t-norm requires a generator and its inverse");
  }
  if (!(generator_at_zero > 0.0)) {
    throw ValidationError("generator value at zero must be positive");
  }
  TNorm tn;
  tn.kind_ = Kind::Archimedean;
  tn.name_ = std::move(name);
  tn.gen_ = std::move(generator);
  tn.gen_inv_ = std::move(generator_inverse);
  tn.gen_at_zero_ = generator_at_zero;
  tn.residuum_ = std::move(residuum);
  return tn;
}

double TNorm::generator(double x) const {
  if (kind_ != Kind::Archimedean) {
    throw ValidationError("minimum t-norm has no additive generator");
  }
  if (x <= 0.0) return gen_at_zero_;
  return gen_(x);
}

double TNorm::generator_at_zero() const {
  if (kind_ != Kind::Archimedean) {
    throw ValidationError("minimum t-norm has no additive generator");
  }
  return gen_at_zero_;
}

double TNorm::pseudo_inverse(double z) const {
  if (kind_ != Kind::Archimedean) {
    throw ValidationError("minimum t-norm has no additive generator");
  }
  const double clamped = std::min(gen_at_zero_, z);
  if (std::isinf(clamped)) return 0.0;
  return gen_inv_(clamped);
}

double TNorm::apply(double a, double b) const {
  if (kind_ == Kind::Minimum) return std::min(a, b);
  return pseudo_inverse(generator(a) + generator(b));
}

double TNorm::fold(std::span<const double> values) const {
  if (values.empty()) throw ValidationError("empty conjunction");
  if (kind_ == Kind::Minimum) {
    return *std::min_element(values.begin(), values.end());
  }
  double sum = 0.0;
  for (double v : values) sum += generator(v);
  return pseudo_inverse(sum);
}

double TNorm::residuum(double a, double b) const {
  if (a <= b) return 1.0;
  if (residuum_) return residuum_(a, b);
  // Generator form of the residuated implication for continuous Archimedean
  // t-norms: t^(-1)(max{0, t(b) - t(a)}).
  return pseudo_inverse(std::max(0.0, generator(b) - generator(a)));
}

double TNorm::residuum_by_definition(double a, double b, int steps) const {
  if (steps < 1) throw ValidationError("residuum_by_definition needs steps >= 1");
  // T is monotone in z, so the sup on a descending grid is the first z
  // with T(z, a) <= b.
  for (int i = steps; i >= 0; --i) {
    const double z = static_cast<double>(i) / steps;
    if (apply(z, a) <= b) return z;
  }
  return 0.0;
}

double snorm_max(std::span<const double> values) {
  if (values.empty()) throw ValidationError("empty disjunction");
  return *std::max_element(values.begin(), values.end());
}

}  // namespace radial
