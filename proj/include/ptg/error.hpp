#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ptg {

/// Raised when an argument violates an operation's precondition. The witness
/// carries the offending vertex index, pair, triple or quadruple when there
/// is one.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& message, std::vector<int> witness = {})
      : std::invalid_argument(message), witness_(std::move(witness)) {}

  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  std::vector<int> witness_;
};

}  // namespace ptg
