#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dessin {

enum class ErrorKind {
  Parse,
  DegreeMismatch,
  NotTransitive,
  GuardExceeded,
  InvalidArgument,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed cycle text or dessin file. `position` is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& reason)
      : Error(ErrorKind::Parse, "at offset " + std::to_string(position) + ": " + reason),
        position_(position),
        reason_(reason) {}
  std::size_t position() const noexcept { return position_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

/// The generators do not act transitively; `orbits` holds the 1-based orbit partition.
class NotTransitiveError : public Error {
 public:
  explicit NotTransitiveError(std::vector<std::vector<std::size_t>> orbits);
  const std::vector<std::vector<std::size_t>>& orbits() const noexcept { return orbits_; }

 private:
  std::vector<std::vector<std::size_t>> orbits_;
};

class GuardExceeded : public Error {
 public:
  explicit GuardExceeded(const std::string& message) : Error(ErrorKind::GuardExceeded, message) {}
  GuardExceeded(const std::string& what, std::size_t value, std::size_t limit)
      : GuardExceeded(what + " " + std::to_string(value) + " exceeds limit " + std::to_string(limit)) {}
};

// Throws GuardExceeded when value > limit.
inline void check_guard(const std::string& what, std::size_t value, std::size_t limit) {
  if (value > limit) throw GuardExceeded(what, value, limit);
}

}  // namespace dessin
