// SPDX-License-Identifier: Apache-2.0

#ifndef PETS_ERRORS_HPP
#define PETS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pets {

// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands belong to different fields, or a point/value has the wrong field.
class FieldMismatchError : public Error {
  public:
    using Error::Error;
};

// Inversion or division by the zero element.
class DivisionByZeroError : public Error {
  public:
    using Error::Error;
};

// Requested more evaluation points than the field has nonzero elements
// (n must stay below q).
class EvaluationPointsExhaustedError : public Error {
  public:
    using Error::Error;
};

// Two shares or fragments carry the same participant index.
class DuplicateIndexError : public Error {
  public:
    using Error::Error;
};

// Fewer shares than the threshold t; the paper's failure symbol.
class InsufficientSharesError : public Error {
  public:
    using Error::Error;
};

// Shares of one reconstruction disagree on framing metadata.
class HeaderMismatchError : public Error {
  public:
    using Error::Error;
};

// An exhaustive census or search was asked to enumerate too large a space.
class SpaceTooLargeError : public Error {
  public:
    using Error::Error;
};

// Malformed share file (bad magic, version, or truncation).
class ShareFormatError : public Error {
  public:
    using Error::Error;
};

// Invalid scheme parameters (t, n, lengths).
class ParamError : public Error {
  public:
    using Error::Error;
};

class RngError : public Error {
  public:
    using Error::Error;
};

// File or stream read/write failure.
class IoError : public Error {
  public:
    using Error::Error;
};

} // namespace pets

#endif
