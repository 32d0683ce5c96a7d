#pragma once

#include <stdexcept>
#include <string>

namespace cellred {

enum class Errc {
  UnsupportedType,
  NonDominantWeight,
  BadGeneratorIndex,
  LeadingTermOfZero,
  DegreeExceedsNu,
  ZeroPolynomial,
  ParseError,
  GroupTooLarge,
  AssociativityFailure,
  ConstructionIncomplete,
  LeadingTermMismatch,
  DataIntegrityFailure,
  UnknownLabel,
  NonDominantTemplate,
  MissingMwData,
  NotPrime,
  TooLarge,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cellred
