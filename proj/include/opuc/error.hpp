#pragma once

#include <stdexcept>
#include <string>

namespace opuc {

/// Precondition violated by the caller (bad parameter, bad degree, ...).
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// The input is well-formed but mathematically inadmissible: a Verblunsky
/// coefficient outside the disk, a non positive-definite moment sequence,
/// a polynomial with a zero where none is allowed.
class InadmissibleInput : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A numerical check failed after the computation ran (residual too large,
/// a verified condition did not hold).
class VerificationFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace opuc
