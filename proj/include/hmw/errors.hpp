#pragma once

#include <stdexcept>
#include <string>

namespace hmw {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (bad JSON, missing or mistyped fields).
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input whose values violate a domain invariant.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Dedekind's criterion failed; factor data need not match the splitting.
class NotPMaximal : public Error {
 public:
  using Error::Error;
};

class ForeignEmbedding : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionTooLarge : public Error {
 public:
  using Error::Error;
};

class NotReducible : public Error {
 public:
  using Error::Error;
};

class SingletonOrbit : public Error {
 public:
  using Error::Error;
};

class MultiplierNotDividing : public Error {
 public:
  using Error::Error;
};

/// An internal postcondition did not hold. Always a bug or a faulty hook.
class CheckFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace hmw
