#pragma once

#include <stdexcept>
#include <string>

namespace qsdisc {

// Error categories. The first group marks malformed input (a CLI maps these
// to exit code 2), the second group marks violated preconditions of an
// otherwise well-formed request (exit code 1).
enum class Errc {
  // input validation
  InvalidInput,
  ZeroWeight,
  NotSurjective,
  ZeroVector,
  NonPositiveLog,
  ZeroRational,
  // preconditions
  NotQuasiSymmetric,
  NotCalabiYau,
  PoleOrZero,
  SpanFailure,
  AllZeroExponents,
  // internal consistency
  UnmatchedNormal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::ZeroWeight: return "ZeroWeight";
    case Errc::NotSurjective: return "NotSurjective";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NonPositiveLog: return "NonPositiveLog";
    case Errc::ZeroRational: return "ZeroRational";
    case Errc::NotQuasiSymmetric: return "NotQuasiSymmetric";
    case Errc::NotCalabiYau: return "NotCalabiYau";
    case Errc::PoleOrZero: return "PoleOrZero";
    case Errc::SpanFailure: return "SpanFailure";
    case Errc::AllZeroExponents: return "AllZeroExponents";
    case Errc::UnmatchedNormal: return "UnmatchedNormal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

  // True for errors that mean "the input document itself is bad" as opposed
  // to "this operation does not apply to the given system".
  bool is_input_error() const {
    switch (code_) {
      case Errc::InvalidInput:
      case Errc::ZeroWeight:
      case Errc::NotSurjective:
      case Errc::ZeroVector:
      case Errc::NonPositiveLog:
      case Errc::ZeroRational:
        return true;
      default:
        return false;
    }
  }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace qsdisc
