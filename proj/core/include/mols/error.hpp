#pragma once

#include <stdexcept>
#include <string>

namespace mols {

// Domain error codes. The CLI maps any Error to exit status 1 with a
// one-line diagnostic; usage problems exit 2 and never reach this type.
enum class Errc {
  NotPrimePower,
  DivisionByZero,
  OrderMismatch,
  ZeroScaleFactor,
  DuplicateClass,
  SameClass,
  NoneFound,
  InvalidBlockSize,
  InvalidTruncation,
  CapTooLarge,
  NotAPolygon,
  NotFull,
  InvalidShift,
  AlphaIsPMinusOne,
  NonPrimeOrder,
  DimensionMismatch,
  MessageLengthMismatch,
  InconsistentWord,
  ParseFailure,
  IoFailure,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

} // namespace mols
