#pragma once

#include <stdexcept>
#include <string>

namespace c4count {

/// Malformed or out-of-contract input (bad file, unsupported parameter).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured resource limit (table size, node budget, enumeration guard)
/// would be exceeded. Never raised in place of a silent approximation.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation's precondition does not hold for the given graph; carries
/// a witness edge when one is available.
class PreconditionError : public InputError {
 public:
  PreconditionError(const std::string& what, int witness_u = -1,
                    int witness_v = -1)
      : InputError(what), witness_u_(witness_u), witness_v_(witness_v) {}

  int witness_u() const { return witness_u_; }
  int witness_v() const { return witness_v_; }

 private:
  int witness_u_;
  int witness_v_;
};

}  // namespace c4count
