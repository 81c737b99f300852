#pragma once

#include <stdexcept>
#include <string>

namespace pathideal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two monomials (or a monomial and an ideal) live in rings with different
/// variable counts.
class AmbientMismatch : public Error {
public:
  AmbientMismatch(std::size_t lhs, std::size_t rhs)
      : Error("ambient mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs) +
              " variables") {}
};

/// An exponent or total degree exceeded the configured cap.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// A size cap (generator count, lcm-lattice size, face count) was exceeded.
/// The computation is aborted; nothing is truncated.
class CapExceeded : public Error {
public:
  CapExceeded(std::string what, std::size_t limit, std::size_t reached)
      : Error(what + " cap exceeded: limit " + std::to_string(limit) + ", reached " +
              std::to_string(reached)),
        limit_(limit), reached_(reached) {}

  std::size_t limit() const noexcept { return limit_; }
  std::size_t reached() const noexcept { return reached_; }

private:
  std::size_t limit_;
  std::size_t reached_;
};

/// Inputs outside the domain an operation is defined on.
class DomainError : public Error {
public:
  using Error::Error;
};

} // namespace pathideal
