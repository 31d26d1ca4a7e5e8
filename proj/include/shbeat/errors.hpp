#pragma once

#include <stdexcept>
#include <string>

namespace shbeat {

/// A caller-supplied value violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested physics has no real solution (evanescent sideband,
/// lost guidance, non-positive denominator).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative solver failed to bracket or converge.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A target lies outside the band reachable by the model. Carries the band
/// so callers can report it.
class InfeasibleError : public std::domain_error {
 public:
  InfeasibleError(const std::string& what, double band_low, double band_high)
      : std::domain_error(what), low_(band_low), high_(band_high) {}

  double band_low() const noexcept { return low_; }
  double band_high() const noexcept { return high_; }

 private:
  double low_;
  double high_;
};

}  // namespace shbeat
