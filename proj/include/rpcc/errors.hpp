// SPDX-License-Identifier: Apache-2.0
#ifndef RPCC_ERRORS_HPP
#define RPCC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rpcc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Degenerate inputs, mismatched shapes, bad sizes or configs.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A point outside the sensor's vertical field of view.
class OutOfFov : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Bitstream failed magic, version, checksum or structural validation.
class CorruptFrame : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file; message carries the byte offset where parsing failed.
class ParseError : public IoError {
 public:
  using IoError::IoError;
};

}  // namespace rpcc

#endif
