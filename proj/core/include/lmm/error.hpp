#pragma once

#include <stdexcept>
#include <string>

namespace lmm {

/// Raised when a LIP operation is evaluated outside the domain where it is
/// defined (e.g. the opposite of black, or -inf combined with M).
class LipDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an image or structuring function violates an operator's
/// precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed or unsupported image/signal files.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lmm
