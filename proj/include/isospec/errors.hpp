#pragma once

#include <stdexcept>
#include <string>

namespace isospec {

// Preconditions and domain restrictions (bad argument, not bad data).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Request outside the trust region of a spectrum table.  Never silently
// undercount: callers must catch this or stay below lambda_trust.
class TrustError : public std::runtime_error {
 public:
  explicit TrustError(const std::string& msg) : std::runtime_error(msg) {}
};

// Quadrature / iteration did not converge to the requested tolerance.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid experiment configuration (unknown key, bad value, missing field).
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace isospec
