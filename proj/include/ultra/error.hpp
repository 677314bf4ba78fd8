#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ultra {

// Domain error: bad input to an operation. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised by the validation gates; carries the offending point indices
// (a pair for diagonal/symmetry faults, a triple for triangle faults).
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::vector<std::size_t> witness)
      : Error(what), witness_(std::move(witness)) {}

  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

}  // namespace ultra
