#pragma once

#include <stdexcept>
#include <string>

namespace mablink {

// Base class for all library errors so callers can catch one type.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
  using Error::Error;
};
struct StateError : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct FeedbackError : Error {
  using Error::Error;
};
struct MeasurementError : Error {
  using Error::Error;
};
struct LengthError : Error {
  using Error::Error;
};
struct SyncError : Error {
  using Error::Error;
};
struct EqError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace mablink
