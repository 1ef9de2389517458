// Copyright 2026 The mgt Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MGT_ERRORS_HPP
#define MGT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mgt {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid field parameters (non-prime p, non-squarefree d, ...).
class DescriptorError : public Error {
 public:
  using Error::Error;
};

/// Operands live in different fields.
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

/// Division by zero / zero denominator while normalizing.
class ZeroDivisionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// An absolute value was applied outside its domain (x = 0, wrong field,
/// or unsatisfiable parameters such as d not a square mod p).
class AbsoluteValueError : public Error {
 public:
  using Error::Error;
};

/// A strict inequality could not be decided at the precision cap.
class PrecisionExhaustedError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// A characteristic polynomial does not split over the implemented field.
class NeedsExtensionError : public Error {
 public:
  using Error::Error;
};

class CommutativityError : public Error {
 public:
  using Error::Error;
};

class CentralityError : public Error {
 public:
  using Error::Error;
};

/// A matrix does not respect a block decomposition it was claimed to.
class BlockStructureError : public Error {
 public:
  using Error::Error;
};

class WordIndexError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace mgt

#endif  // MGT_ERRORS_HPP
