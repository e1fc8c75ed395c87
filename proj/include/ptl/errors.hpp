#pragma once

#include <stdexcept>
#include <string>

namespace ptl {

// Base class for everything the engine throws on bad input. Internal
// invariant violations use std::logic_error instead, so callers can tell
// "your input is wrong" from "the engine is wrong".
class PtlError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public PtlError {
 public:
  ParseError(const std::string& msg, int line, int column)
      : PtlError(msg), line(line), column(column) {}
  int line;
  int column;
};

class UnknownAtomError : public PtlError {
 public:
  using PtlError::PtlError;
};

class VocabularyTooLargeError : public PtlError {
 public:
  using PtlError::PtlError;
};

class VocabularyMismatchError : public PtlError {
 public:
  using PtlError::PtlError;
};

class NestedTypicalityError : public PtlError {
 public:
  using PtlError::PtlError;
};

class ConvexityViolationError : public PtlError {
 public:
  using PtlError::PtlError;
};

class NotConditionalKbError : public PtlError {
 public:
  using PtlError::PtlError;
};

class NotPropositionalError : public PtlError {
 public:
  using PtlError::PtlError;
};

class EmptyInputError : public PtlError {
 public:
  using PtlError::PtlError;
};

class UnsupportedCombinationError : public PtlError {
 public:
  using PtlError::PtlError;
};

}  // namespace ptl
