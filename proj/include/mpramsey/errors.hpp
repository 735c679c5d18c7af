#pragma once

#include <stdexcept>
#include <string>

namespace mpramsey {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad part sizes, same-part
/// pair, out-of-range vertex, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exact search or enumeration was asked to run beyond its configured
/// size cap. Searches never truncate silently; they throw this instead.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace mpramsey
