#pragma once

#include <stdexcept>
#include <string>

namespace ahlfors {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical parameter is outside its admissible range (|p| >= 1, ...).
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

/// Domain geometry fails validation (overlapping holes, bad slits, ...).
class GeometryError : public Error {
 public:
  using Error::Error;
};

class TooFewSamplesError : public InvalidParameterError {
 public:
  using InvalidParameterError::InvalidParameterError;
};

/// sqrt requested at the branch point w = 0.
class BranchPointError : public Error {
 public:
  using Error::Error;
};

/// A documented caller-side precondition was detected to fail.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested too close to a singular set (the slit E).
class NearSingularityError : public Error {
 public:
  using Error::Error;
};

class OutOfDomainError : public Error {
 public:
  using Error::Error;
};

/// A limit/contour computation failed to settle across resolutions.
class NumericalInstabilityError : public Error {
 public:
  using Error::Error;
};

/// Argument-principle count did not land near an integer; raise n.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// Probe value too close to the unit circle for a stable valence count.
class MarginError : public Error {
 public:
  using Error::Error;
};

class UnsupportedVariantError : public Error {
 public:
  using Error::Error;
};

/// Invariant violation inside the library itself.
class InternalError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ahlfors
