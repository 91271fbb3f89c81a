#pragma once

#include <stdexcept>
#include <string>

namespace spectral {

// Raised when an operation's documented precondition does not hold for its
// input. `witness` names the offending point, pair or piece in readable form.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(const std::string& what, std::string witness = {})
      : std::invalid_argument(what), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

}  // namespace spectral
