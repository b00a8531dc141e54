#pragma once

#include <stdexcept>
#include <string>

namespace parimutuel {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The wagering game has no pure-strategy equilibrium (kappa <= 0.5).
class NoEquilibrium : public std::runtime_error {
 public:
  NoEquilibrium() : std::runtime_error("no equilibrium: kappa must exceed 0.5") {}
};

/// Numerical routine failed (non-finite integrand, iteration limit).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace parimutuel
