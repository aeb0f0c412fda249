#pragma once

#include <stdexcept>

namespace circ {

/// Size or shape disagreement between operands (vector lengths, torus
/// dimensions, axis counts).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside an operation's domain: zero modulus, index out of range,
/// non-finite entries, z = 0.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid plan or tool configuration, e.g. a radix-2 plan on a size that is
/// not a power of two.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two computation routes that must agree (an internal cross-check) did not.
class NumericalContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace circ
