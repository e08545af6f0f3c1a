#ifndef PDEM_ERRORS_HPP
#define PDEM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pdem {

// Base class for every failure the library can raise. Each concrete type
// corresponds to one documented error path.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// specfun
struct PoleError : Error { using Error::Error; };
struct ParamSingular : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct ContourError : Error { using Error::Error; };
struct QuadratureNotConverged : Error { using Error::Error; };

// model
struct DomainError : Error { using Error::Error; };
struct DomainEscape : Error { using Error::Error; };
struct StepTooLarge : Error { using Error::Error; };
struct NotNormalizable : Error { using Error::Error; };

// algebra
struct NegativeCoefficient : Error { using Error::Error; };

// bgcs
struct TruncationTooSmall : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// stats
struct VacuumUndefined : Error { using Error::Error; };
struct ClosedFormPole : Error { using Error::Error; };

// cli / config
struct ConfigError : Error { using Error::Error; };

}  // namespace pdem

#endif
