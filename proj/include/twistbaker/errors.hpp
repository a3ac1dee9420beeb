#pragma once

#include <stdexcept>
#include <string>

namespace twistbaker {

// Argument outside the phase space or outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// (I - A) x = b has no unique solution; only the all-L word produces this.
class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical invariant that must hold for every correct build failed.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A configured size cap (period, word length) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace twistbaker
