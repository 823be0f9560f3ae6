#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flexdist {

/// Base class for every input or validation failure raised by the library.
/// The CLI maps these to exit code 2; anything else is an internal error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptySeries : public Error {
 public:
  EmptySeries() : Error("time series is empty") {}
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t lhs, std::size_t rhs)
      : Error("length mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)),
        lhs_(lhs),
        rhs_(rhs) {}

  std::size_t lhs() const noexcept { return lhs_; }
  std::size_t rhs() const noexcept { return rhs_; }

 private:
  std::size_t lhs_;
  std::size_t rhs_;
};

/// A NaN or infinite sample. `position` is a 0-based sample index for
/// in-memory series, or a 1-based line number when raised by the CSV reader.
class NonFiniteSample : public Error {
 public:
  NonFiniteSample(std::size_t position, const std::string& where)
      : Error("non-finite sample at " + where + " " + std::to_string(position)), position_(position) {}
  explicit NonFiniteSample(std::size_t index) : NonFiniteSample(index, "index") {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NonSquare : public Error {
 public:
  NonSquare(std::size_t rows, std::size_t cols)
      : Error("cost matrix is not square: " + std::to_string(rows) + "x" + std::to_string(cols)) {}
};

class NonFiniteEntry : public Error {
 public:
  NonFiniteEntry(std::size_t row, std::size_t col)
      : Error("non-finite cost entry at (" + std::to_string(row) + "," + std::to_string(col) + ")") {}
};

class NegativeEntry : public Error {
 public:
  NegativeEntry(std::size_t row, std::size_t col)
      : Error("negative cost entry at (" + std::to_string(row) + "," + std::to_string(col) + ")") {}
};

class InvalidAssignment : public Error {
 public:
  using Error::Error;
};

class TooShort : public Error {
 public:
  TooShort(std::size_t length, std::size_t samples_per_day)
      : Error("series of length " + std::to_string(length) + " holds fewer than 2 complete days of " +
              std::to_string(samples_per_day) + " samples") {}
};

class KTooLarge : public Error {
 public:
  KTooLarge(std::size_t k, std::size_t available)
      : Error("k = " + std::to_string(k) + " exceeds the " + std::to_string(available) +
              " available training patterns") {}
};

// CSV ingest failures. Line numbers are 1-based physical lines.

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("parse error at line " + std::to_string(line) + ": " + reason), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IrregularInterval : public ParseError {
 public:
  IrregularInterval(std::size_t line, const std::string& reason) : ParseError(line, reason) {}
};

class RaggedRows : public ParseError {
 public:
  RaggedRows(std::size_t line, std::size_t expected, std::size_t got)
      : ParseError(line, "expected " + std::to_string(expected) + " fields, found " + std::to_string(got)) {}
};

class MissingLabel : public ParseError {
 public:
  explicit MissingLabel(std::size_t line) : ParseError(line, "missing label") {}
};

class EmptyFile : public Error {
 public:
  explicit EmptyFile(const std::string& path) : Error("no data rows in " + path) {}
};

}  // namespace flexdist
