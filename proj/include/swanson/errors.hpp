#pragma once

#include <stdexcept>
#include <string>

namespace swanson {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameter constraint failures (alpha+beta >= 1, 4*alpha*beta >= 1, ...).
struct ConstraintViolation : Error {
  std::string which;
  ConstraintViolation(std::string which_, const std::string& msg)
      : Error(msg), which(std::move(which_)) {}
};

struct OverflowError : Error {
  using Error::Error;
};

struct GridTooCoarse : Error {
  using Error::Error;
};

struct GridMismatch : Error {
  using Error::Error;
};

struct PoleError : Error {
  using Error::Error;
};

struct DegenerateConnection : Error {
  using Error::Error;
};

struct ConvergenceFailure : Error {
  using Error::Error;
};

struct AsymptoticDivergence : Error {
  using Error::Error;
};

struct InvalidWavenumber : Error {
  using Error::Error;
};

struct GammaPole : Error {
  using Error::Error;
};

struct NonAsymptoticWindow : Error {
  using Error::Error;
};

struct WindowTooSmall : Error {
  using Error::Error;
};

struct InsufficientPeaks : Error {
  using Error::Error;
};

struct NoBoundStates : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace swanson
