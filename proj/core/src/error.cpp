#include "mols/error.hpp"

namespace mols {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::NotPrimePower: return "NotPrimePower";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::ZeroScaleFactor: return "ZeroScaleFactor";
    case Errc::DuplicateClass: return "DuplicateClass";
    case Errc::SameClass: return "SameClass";
    case Errc::NoneFound: return "NoneFound";
    case Errc::InvalidBlockSize: return "InvalidBlockSize";
    case Errc::InvalidTruncation: return "InvalidTruncation";
    case Errc::CapTooLarge: return "CapTooLarge";
    case Errc::NotAPolygon: return "NotAPolygon";
    case Errc::NotFull: return "NotFull";
    case Errc::InvalidShift: return "InvalidShift";
    case Errc::AlphaIsPMinusOne: return "AlphaIsPMinusOne";
    case Errc::NonPrimeOrder: return "NonPrimeOrder";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::MessageLengthMismatch: return "MessageLengthMismatch";
    case Errc::InconsistentWord: return "InconsistentWord";
    case Errc::ParseFailure: return "ParseFailure";
    case Errc::IoFailure: return "IoFailure";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

} // namespace mols
