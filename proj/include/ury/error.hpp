#pragma once

#include <stdexcept>
#include <string>

namespace ury {

enum class Errc {
  MembershipError,
  KatetovViolation,
  OverlapError,
  MetricMismatchError,
  EmptyAmalgamBase,
  LevelError,
  IsometryViolation,
  InvalidLetter,
  IdentityElement,
  SearchExhausted,
  NoCertificate,
  CertificateMissing,
  TrivialTree,
  NonIntegerValues,
  BelowThreshold,
  NotTransitive,
  TrivialX,
  NotCommensurating,
  WindowTooSmall,
  UnknownStabilizerType,
  SchemaError,
  ArithmeticOverflow,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MembershipError: return "MembershipError";
    case Errc::KatetovViolation: return "KatetovViolation";
    case Errc::OverlapError: return "OverlapError";
    case Errc::MetricMismatchError: return "MetricMismatchError";
    case Errc::EmptyAmalgamBase: return "EmptyAmalgamBase";
    case Errc::LevelError: return "LevelError";
    case Errc::IsometryViolation: return "IsometryViolation";
    case Errc::InvalidLetter: return "InvalidLetter";
    case Errc::IdentityElement: return "IdentityElement";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::NoCertificate: return "NoCertificate";
    case Errc::CertificateMissing: return "CertificateMissing";
    case Errc::TrivialTree: return "TrivialTree";
    case Errc::NonIntegerValues: return "NonIntegerValues";
    case Errc::BelowThreshold: return "BelowThreshold";
    case Errc::NotTransitive: return "NotTransitive";
    case Errc::TrivialX: return "TrivialX";
    case Errc::NotCommensurating: return "NotCommensurating";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::UnknownStabilizerType: return "UnknownStabilizerType";
    case Errc::SchemaError: return "SchemaError";
    case Errc::ArithmeticOverflow: return "ArithmeticOverflow";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace ury
