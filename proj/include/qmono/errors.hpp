#pragma once

#include <stdexcept>
#include <string>

namespace qmono {

/// Invalid argument: bad subsystem index, wrong dimensions, out-of-range parameter.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input that cannot be parsed or fails validation (state files, state specs, configs).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested measure has no supported evaluation route for this state/cut.
class UnsupportedRoute : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quantity that must be nonnegative came out negative beyond roundoff.
class NumericalIntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qmono
