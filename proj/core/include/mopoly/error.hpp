#ifndef MOPOLY_ERROR_HPP
#define MOPOLY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mopoly {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A caller broke an operation's precondition (zero divisor, degree
// mismatch, interval endpoint hitting a root, ...).
struct ContractError : Error {
  using Error::Error;
};

// Parameters outside a family's admissible range, or an index outside the
// range where the family is defined.
struct DomainError : Error {
  using Error::Error;
};

// The moment system for an index is singular, or an integral that
// normality guarantees nonzero came out zero.
struct NotNormalError : Error {
  using Error::Error;
};

// A structural identity that must hold exactly did not (e.g. a nonzero
// residual when expanding in a triangular polynomial basis).
struct StructuralError : Error {
  using Error::Error;
};

}  // namespace mopoly

#endif
