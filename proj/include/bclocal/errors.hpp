#pragma once

#include <stdexcept>
#include <string>

namespace bclocal {

enum class Errc {
  NotPrime,
  PolynomialNotIrreducibleModP,
  NotEisenstein,
  LevelMismatch,
  SizeGuardExceeded,
  BadTarget,
  NonpositiveBeta,
  TruncationTooSmall,
  MassNotOne,
  UnsupportedField,
  BetaNotAboveOne,
  GuardExceeded,
  SupportTouchesBoundary,
  WindowTooSmall,
  IncoherentTower,
  Overflow,
  BadDescriptor,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool ok, Errc c, const std::string& msg) {
  if (!ok) fail(c, msg);
}

} // namespace bclocal
