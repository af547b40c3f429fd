#pragma once

#include <stdexcept>
#include <string>

namespace embedrank {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed pre-tagged input (missing tag separator, empty field).
class ParseError : public Error {
public:
  using Error::Error;
};

/// Malformed model or dataset file.
class FormatError : public Error {
public:
  using Error::Error;
};

/// Input text is not valid UTF-8.
class EncodingError : public Error {
public:
  using Error::Error;
};

/// No token or n-gram of the sequence is in the model vocabulary.
class OovError : public Error {
public:
  using Error::Error;
};

/// Cosine similarity requested against a zero vector.
class UndefinedSimilarityError : public Error {
public:
  using Error::Error;
};

}  // namespace embedrank
