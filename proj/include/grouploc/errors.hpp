#pragma once
#include <stdexcept>
#include <string>

namespace grouploc {

enum class Err {
  NonPrimeElement,
  NonPositive,
  UnknownSymbol,
  UnassignedIndeterminate,
  ParseError,
  ArityMismatch,
  InvalidSystem,
  AmbientMismatch,
  UnverifiedCertificate,
  NotInCommutatorSubgroup,
  NotRankTwoFree,
  ZeroDivisor,
  PrerequisiteNotMet,
  LevelOutOfRange,
  CapExceeded,
  Internal,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::NonPrimeElement: return "NonPrimeElement";
    case Err::NonPositive: return "NonPositive";
    case Err::UnknownSymbol: return "UnknownSymbol";
    case Err::UnassignedIndeterminate: return "UnassignedIndeterminate";
    case Err::ParseError: return "ParseError";
    case Err::ArityMismatch: return "ArityMismatch";
    case Err::InvalidSystem: return "InvalidSystem";
    case Err::AmbientMismatch: return "AmbientMismatch";
    case Err::UnverifiedCertificate: return "UnverifiedCertificate";
    case Err::NotInCommutatorSubgroup: return "NotInCommutatorSubgroup";
    case Err::NotRankTwoFree: return "NotRankTwoFree";
    case Err::ZeroDivisor: return "ZeroDivisor";
    case Err::PrerequisiteNotMet: return "PrerequisiteNotMet";
    case Err::LevelOutOfRange: return "LevelOutOfRange";
    case Err::CapExceeded: return "CapExceeded";
    case Err::Internal: return "Internal";
  }
  return "?";
}

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& msg)
      : std::runtime_error(std::string(err_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& msg) { throw Error(c, msg); }

}  // namespace grouploc
