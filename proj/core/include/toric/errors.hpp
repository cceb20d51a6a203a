#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: fan axiom violations, schema problems, broken preconditions.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A halfspace intersection whose solution set is nonempty and unbounded.
class UnboundedError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A named verification claim failed on an otherwise well-formed run.
class ClaimError : public Error {
 public:
  explicit ClaimError(std::string claim, const std::string& detail = "")
      : Error("claim: " + claim + (detail.empty() ? "" : " (" + detail + ")")),
        claim_(std::move(claim)) {}

  const std::string& claim() const { return claim_; }

 private:
  std::string claim_;
};

// An iteration or size budget was exhausted.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace toric
