#pragma once

#include <stdexcept>
#include <string>

namespace monotri {

// Malformed arguments: arity mismatches, shape errors, bad bottom rows.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Raised by op_invert when the operator has no inverse on polynomials.
class NotInvertible : public std::domain_error {
 public:
  explicit NotInvertible(const std::string& what) : std::domain_error(what) {}
};

// A result that should be impossible, e.g. a product formula that is not integral.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace monotri
