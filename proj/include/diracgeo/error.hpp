#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diracgeo {

// Base class for every error the toolkit raises.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Expression text could not be parsed. Carries the byte offset of the
// offending token and a description of what was expected there.
struct SyntaxError : Error {
  SyntaxError(std::size_t offset_, std::string expected_, const std::string& found)
      : Error("syntax error at offset " + std::to_string(offset_) + ": expected " + expected_ +
              ", found " + found),
        offset(offset_),
        expected(std::move(expected_)) {}
  std::size_t offset;
  std::string expected;
};

struct UnboundSymbol : Error {
  explicit UnboundSymbol(const std::string& name_)
      : Error("unbound symbol: " + name_), name(name_) {}
  std::string name;
};

struct DomainError : Error {
  using Error::Error;
};

// Exact rational arithmetic left the 64-bit range.
struct OverflowError : Error {
  using Error::Error;
};

struct SamplingExhausted : Error {
  using Error::Error;
};

// Metric-file errors. FormatError carries the 1-based line number.
struct FormatError : Error {
  FormatError(int line_, const std::string& what_)
      : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
  int line;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct AsymmetricInput : Error {
  using Error::Error;
};

struct MissingSection : Error {
  explicit MissingSection(const std::string& section)
      : Error("missing required section [" + section + "]") {}
};

struct SingularMetric : Error {
  using Error::Error;
};

struct SlotOutOfRange : Error {
  using Error::Error;
};

struct SameVariance : Error {
  using Error::Error;
};

struct MissingStressEnergy : Error {
  using Error::Error;
};

struct ZeroCoupling : Error {
  using Error::Error;
};

// Symbolic tetrads exist only for diagonal metrics; callers get this and
// should fall back to the per-point numeric path.
struct NonDiagonalSymbolic : Error {
  using Error::Error;
};

struct NegativeRadicand : Error {
  using Error::Error;
};

struct NotFlat : Error {
  using Error::Error;
};

}  // namespace diracgeo
