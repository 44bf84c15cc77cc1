#pragma once

#include <stdexcept>
#include <string>

namespace rarewave {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// 1 - phi'(x) <= 0 somewhere: the implicit functions Z and G stop existing.
struct HyperbolicityViolated : Error {
  explicit HyperbolicityViolated(const std::string& w) : Error("HyperbolicityViolated: " + w) {}
};

struct NoConvergence : Error {
  explicit NoConvergence(const std::string& w) : Error("NoConvergence: " + w) {}
};

struct QuadratureNotConverged : Error {
  explicit QuadratureNotConverged(const std::string& w) : Error("QuadratureNotConverged: " + w) {}
};

struct CflViolation : Error {
  explicit CflViolation(const std::string& w) : Error("CflViolation: " + w) {}
};

struct NonFiniteValue : Error {
  explicit NonFiniteValue(const std::string& w) : Error("NonFiniteValue: " + w) {}
};

struct RegionBoundaryTooClose : Error {
  explicit RegionBoundaryTooClose(const std::string& w) : Error("RegionBoundaryTooClose: " + w) {}
};

struct DegenerateFit : Error {
  explicit DegenerateFit(const std::string& w) : Error("DegenerateFit: " + w) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& w) : Error("ConfigError: " + w) {}
};

}  // namespace rarewave
