#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace codeal {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("inversion of zero in F_p") {}
};

struct ModulusMismatch : Error {
  ModulusMismatch() : Error("operands live in different prime fields") {}
};

struct LengthMismatch : Error {
  LengthMismatch() : Error("exponent vectors have different lengths") {}
};

struct RankDeficient : Error {
  RankDeficient(std::size_t rank, std::size_t rows)
      : Error("generator matrix has rank " + std::to_string(rank) + " < " +
              std::to_string(rows) + " rows") {}
};

struct ZeroColumn : Error {
  std::size_t column;  // 0-based
  explicit ZeroColumn(std::size_t col)
      : Error("generator matrix has zero column " + std::to_string(col + 1)),
        column(col) {}
};

struct WrongCardinality : Error {
  WrongCardinality(std::size_t got, std::size_t want)
      : Error("index set has " + std::to_string(got) + " elements, expected " +
              std::to_string(want)) {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& what) : Error(what) {}
};

struct NotInformationSet : Error {
  NotInformationSet() : Error("index set is not an information set") {}
};

struct NotBinary : Error {
  NotBinary() : Error("operation is defined for binary codes only") {}
};

struct ZeroWord : Error {
  ZeroWord() : Error("operation requires a nonzero codeword") {}
};

struct NotInIdeal : Error {
  NotInIdeal() : Error("binomial does not belong to the code ideal") {}
};

struct NotACodeword : Error {
  NotACodeword() : Error("vector is not a codeword (fails the parity check)") {}
};

struct ParseError : Error {
  std::size_t line;  // 1-based
  ParseError(std::size_t line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

}  // namespace codeal
