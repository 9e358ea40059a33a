#pragma once

#include <stdexcept>
#include <string>

namespace majassign {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed profile file or assignment literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The requested operation needs a dense universe larger than the brute limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Majority-oracle answers are not consistent with any profile.
class Unresolvable : public Error {
 public:
  using Error::Error;
};

}  // namespace majassign
