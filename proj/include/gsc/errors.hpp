#pragma once

#include <stdexcept>
#include <string>

namespace gsc {

/// Base class for all structured errors thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// vee() received a matrix that is not antisymmetric within tolerance.
class AsymmetryError : public Error {
 public:
  using Error::Error;
};

/// project_so3() received a (near-)singular matrix.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// The normalized attitude-error set is undefined at antipodal attitudes.
class AntipodalError : public Error {
 public:
  using Error::Error;
};

/// Attitude gains violate the surface gain condition eta > k_R / k_omega^2.
class GainError : public Error {
 public:
  using Error::Error;
};

/// The commanded thrust direction is undefined (zero net specific force).
class DegenerateThrustError : public Error {
 public:
  using Error::Error;
};

/// The desired heading is parallel to the commanded thrust axis.
class ParallelHeadingError : public Error {
 public:
  using Error::Error;
};

/// Requested attitude-error-norm bound exceeds the admissible maximum.
class ThetaTooLargeError : public Error {
 public:
  using Error::Error;
};

/// A matrix required to be positive definite is not.
class NotPositiveDefiniteError : public Error {
 public:
  using Error::Error;
};

/// Time argument outside the recorded range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Two telemetries do not share the same sampling grid.
class GridMismatchError : public Error {
 public:
  using Error::Error;
};

/// A polynomial boundary-value fit failed to reproduce its conditions.
class IllConditionedError : public Error {
 public:
  using Error::Error;
};

/// Configuration file/value problem.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace gsc
