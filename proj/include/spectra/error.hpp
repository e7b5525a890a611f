#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spectra {

enum class Errc {
  ArityMismatch,
  ParseError,
  EmptyBases,
  UnequalCardinality,
  ExchangeFailure,
  BoundsViolation,
  ScanBudgetExceeded,
  EmptySet,
  ZeroAtE,
  NotHomogeneous,
  ZeroPolynomial,
  SizeBudgetExceeded,
  NonHermitianInput,
  PsdCertificateFailure,
  IdentityFailure,
  NotPSD,
  WrongCorank,
  TransversalityFailure,
  SingularGram,
  MonicMismatch,
};

constexpr std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::EmptyBases: return "EmptyBases";
    case Errc::UnequalCardinality: return "UnequalCardinality";
    case Errc::ExchangeFailure: return "ExchangeFailure";
    case Errc::BoundsViolation: return "BoundsViolation";
    case Errc::ScanBudgetExceeded: return "ScanBudgetExceeded";
    case Errc::EmptySet: return "EmptySet";
    case Errc::ZeroAtE: return "ZeroAtE";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case Errc::NonHermitianInput: return "NonHermitianInput";
    case Errc::PsdCertificateFailure: return "PsdCertificateFailure";
    case Errc::IdentityFailure: return "IdentityFailure";
    case Errc::NotPSD: return "NotPSD";
    case Errc::WrongCorank: return "WrongCorank";
    case Errc::TransversalityFailure: return "TransversalityFailure";
    case Errc::SingularGram: return "SingularGram";
    case Errc::MonicMismatch: return "MonicMismatch";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace spectra
