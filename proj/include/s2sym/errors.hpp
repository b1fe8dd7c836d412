#pragma once

#include <stdexcept>
#include <string>

namespace s2sym {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed arguments that violate an operation's precondition.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Integer arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A negative power was requested of a matrix that is not unimodular.
class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

/// theta (or a branch of k) outside the S2 class.
class InvalidParametersError : public Error {
 public:
  using Error::Error;
};

/// A generator triple whose A-exponents have hcf != 1.
class NotGeneratingError : public Error {
 public:
  using Error::Error;
};

/// Parameters that do not describe an automorphism of D.
class NotAutomorphismError : public Error {
 public:
  using Error::Error;
};

/// F(Bq) is the zero matrix for q = 0 mod p.
class SingularFError : public Error {
 public:
  using Error::Error;
};

/// An automorphism of D whose linear part is not compatible with the
/// rotation structure of the chosen S2(k); it has no extension to S2(k).
class NoExtensionError : public Error {
 public:
  using Error::Error;
};

/// A derived quantity broke an invariant that should hold by construction.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace s2sym
