#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>

namespace schottky {

namespace detail {
inline std::string format_number(double value) {
  std::ostringstream out;
  out.precision(6);
  out << value;
  return out.str();
}
}  // namespace detail

/// Base class for every domain error raised by the library. The CLI maps
/// these to exit code 1 and prints `what()` verbatim.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two geodesics share an endpoint (within tolerance), so "crossing" is
/// not well defined.
class AmbiguousConfiguration : public Error {
 public:
  using Error::Error;
};

/// The generator circles of a requested configuration overlap.
class ConfigurationRejected : public Error {
 public:
  using Error::Error;
};

/// Unreadable or malformed configuration document.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A finite sequence ran out before the nested circles became small enough.
class NeedsMorePrefix : public Error {
 public:
  NeedsMorePrefix(std::size_t available, double reached_diameter)
      : Error("needs more prefix: all " + std::to_string(available) +
              " available symbols consumed, reached diameter " + detail::format_number(reached_diameter)),
        available_(available),
        reached_diameter_(reached_diameter) {}

  std::size_t available() const noexcept { return available_; }
  double reached_diameter() const noexcept { return reached_diameter_; }

 private:
  std::size_t available_;
  double reached_diameter_;
};

/// The point lies in a gap between the generator arcs after `depth` steps,
/// i.e. it is in the ordinary set at that level.
class NotALimitPoint : public Error {
 public:
  explicit NotALimitPoint(std::size_t depth)
      : Error("not a limit point at depth " + std::to_string(depth)), depth_(depth) {}

  std::size_t depth() const noexcept { return depth_; }

 private:
  std::size_t depth_;
};

/// A boundary decision fell inside the numeric tolerance band.
class ToleranceError : public Error {
 public:
  using Error::Error;
};

class AmbiguousCrossing : public Error {
 public:
  using Error::Error;
};

}  // namespace schottky
