#pragma once

#include <stdexcept>
#include <string>

namespace piradiance {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input: dimension expressions, rationals, scenario files.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NonPositiveArgument : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Displacement exponent N outside the range an operation accepts.
class InvalidN : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Two sequences that must line up have different lengths.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

/// Base for ill-posed pin choices handed to the pi solver.
class PinError : public Error {
 public:
  using Error::Error;
};

class PinCountMismatch : public PinError {
 public:
  using PinError::PinError;
};

/// The unpinned columns of G do not span its column space.
class SingularSubsystem : public PinError {
 public:
  using PinError::PinError;
};

/// Pins are individually solvable but yield linearly dependent invariants.
class DependentInvariants : public PinError {
 public:
  using PinError::PinError;
};

class NotSingleInvariant : public Error {
 public:
  using Error::Error;
};

class ToleranceNotMet : public Error {
 public:
  using Error::Error;
};

class DivergentIntegral : public Error {
 public:
  using Error::Error;
};

class NoSignChange : public Error {
 public:
  using Error::Error;
};

class NoMaximum : public Error {
 public:
  using Error::Error;
};

class UnknownLaw : public Error {
 public:
  using Error::Error;
};

}  // namespace piradiance
