#pragma once

#include <stdexcept>
#include <string>

namespace homsuper {

enum class Err {
  DimensionMismatch,
  AmbientMismatch,
  NotInvertible,
  NotAlphaFixed,
  NotAutomorphism,
  NegativePowerNonRegular,
  DegenerateForm,
  CommutativeIdealPresent,
  NotInvariant,
  HypothesisNotMet,
  InvalidAlgebra,
};

inline const char* err_name(Err code) {
  switch (code) {
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::AmbientMismatch: return "AmbientMismatch";
    case Err::NotInvertible: return "NotInvertible";
    case Err::NotAlphaFixed: return "NotAlphaFixed";
    case Err::NotAutomorphism: return "NotAutomorphism";
    case Err::NegativePowerNonRegular: return "NegativePowerNonRegular";
    case Err::DegenerateForm: return "DegenerateForm";
    case Err::CommutativeIdealPresent: return "CommutativeIdealPresent";
    case Err::NotInvariant: return "NotInvariant";
    case Err::HypothesisNotMet: return "HypothesisNotMet";
    case Err::InvalidAlgebra: return "InvalidAlgebra";
  }
  return "UnknownError";
}

// Operation failure carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

// Input-file rejection; line numbers are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace homsuper
