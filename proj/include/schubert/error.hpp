#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad rank, out-of-range letter, non-reduced word, ...
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// A denominator linear form had no proportional factor left to cancel.
class CancellationFailure : public Error {
public:
  using Error::Error;
};

/// A denominator vanished at the sampled evaluation point.
class NonGenericPoint : public Error {
public:
  using Error::Error;
};

/// Refused to enumerate a group larger than the configured bound.
class GroupTooLarge : public Error {
public:
  using Error::Error;
};

} // namespace schubert
