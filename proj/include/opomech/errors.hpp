#pragma once

#include <stdexcept>
#include <string>

namespace opomech {

/// Drift matrix has a non-negative spectral abscissa; no steady state exists.
class UnstableSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The vectorized Lyapunov system is numerically rank-deficient (can happen
/// exactly on the stability boundary).
class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// kappa^2 == chi^2 cos^2(phi): the off-diagonal entropy expression blows up.
class DivergentDenominator : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotSupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sweep configuration problem; carries file/line/field context in the message.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace opomech
