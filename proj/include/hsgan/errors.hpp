#pragma once

#include <stdexcept>
#include <string>

namespace hsgan {

// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration value or malformed config file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A caller violated an operation precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Matrix or parameter dimension mismatch; the message names both shapes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Backward pass invoked with a cache that does not match the parameters.
class CacheError : public Error {
 public:
  using Error::Error;
};

// Class label outside the declared vocabulary.
class LabelError : public Error {
 public:
  using Error::Error;
};

// Malformed binary payload, header or file structure.
class FormatError : public Error {
 public:
  using Error::Error;
};

// File does not start with the expected magic bytes.
class BadMagicError : public FormatError {
 public:
  using FormatError::FormatError;
};

// File carries an unsupported format version.
class VersionError : public FormatError {
 public:
  using FormatError::FormatError;
};

// Stored checksum does not match the file content.
class ChecksumError : public FormatError {
 public:
  using FormatError::FormatError;
};

// Filesystem-level failure (open/read/write).
class IoError : public Error {
 public:
  using Error::Error;
};

// Degenerate numerical situation: rank deficiency, non-finite values.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace hsgan
