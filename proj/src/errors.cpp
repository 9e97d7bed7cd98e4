#include "bclocal/errors.hpp"

namespace bclocal {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::PolynomialNotIrreducibleModP: return "PolynomialNotIrreducibleModP";
    case Errc::NotEisenstein: return "NotEisenstein";
    case Errc::LevelMismatch: return "LevelMismatch";
    case Errc::SizeGuardExceeded: return "SizeGuardExceeded";
    case Errc::BadTarget: return "BadTarget";
    case Errc::NonpositiveBeta: return "NonpositiveBeta";
    case Errc::TruncationTooSmall: return "TruncationTooSmall";
    case Errc::MassNotOne: return "MassNotOne";
    case Errc::UnsupportedField: return "UnsupportedField";
    case Errc::BetaNotAboveOne: return "BetaNotAboveOne";
    case Errc::GuardExceeded: return "GuardExceeded";
    case Errc::SupportTouchesBoundary: return "SupportTouchesBoundary";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::IncoherentTower: return "IncoherentTower";
    case Errc::Overflow: return "Overflow";
    case Errc::BadDescriptor: return "BadDescriptor";
  }
  return "Unknown";
}

} // namespace bclocal
