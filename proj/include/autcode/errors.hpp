#pragma once

#include <stdexcept>
#include <string>

namespace autcode {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: mismatched lengths, out-of-range indices.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Text that could not be parsed (MAT files, permutations, polynomial strings).
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// Well-formed input that violates a mathematical precondition of the operation,
/// e.g. a permutation that is not an automorphism of the code.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A permutation whose order is not of the requested prime or prime-product shape.
class CycleTypeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Exhaustive enumeration was refused because the dimension exceeds the cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// The hypothesis of a structural theorem is not satisfied by the instance.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

}  // namespace autcode
