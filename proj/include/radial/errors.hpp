#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace radial {

/// Malformed documents, invalid parameters, incompatible operator/shape
/// combinations. CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// No rule fires at the given input point. CLI exit code 4.
class IncompleteInputError : public std::runtime_error {
public:
  IncompleteInputError(const std::string& msg, std::vector<double> x)
      : std::runtime_error(msg), input(std::move(x)) {}

  std::vector<double> input;
};

/// Two rules impose disjoint output constraints at the given input point.
/// Carries the witness pair and their output intervals. CLI exit code 3.
class IncoherentInputError : public std::runtime_error {
public:
  IncoherentInputError(const std::string& msg, std::vector<double> x,
                       std::size_t j, std::size_t k, double j_lo, double j_hi,
                       double k_lo, double k_hi)
      : std::runtime_error(msg),
        input(std::move(x)),
        rule_j(j),
        rule_k(k),
        j_lower(j_lo),
        j_upper(j_hi),
        k_lower(k_lo),
        k_upper(k_hi) {}

  std::vector<double> input;
  std::size_t rule_j, rule_k;  // 0-based witness pair
  double j_lower, j_upper;     // output interval of rule_j
  double k_lower, k_upper;     // output interval of rule_k
};

/// Iterative routine failed to converge within its budget. Carries the best
/// value seen so far. CLI exit code 5.
class NumericError : public std::runtime_error {
public:
  NumericError(const std::string& msg, double best)
      : std::runtime_error(msg), best_value(best) {}

  double best_value;
};

}  // namespace radial
