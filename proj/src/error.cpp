#include "cellred/error.hpp"

#include <stdexcept>

#include "cellred/integer.hpp"

namespace cellred {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::UnsupportedType: return "UnsupportedType";
    case Errc::NonDominantWeight: return "NonDominantWeight";
    case Errc::BadGeneratorIndex: return "BadGeneratorIndex";
    case Errc::LeadingTermOfZero: return "LeadingTermOfZero";
    case Errc::DegreeExceedsNu: return "DegreeExceedsNu";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ParseError: return "ParseError";
    case Errc::GroupTooLarge: return "GroupTooLarge";
    case Errc::AssociativityFailure: return "AssociativityFailure";
    case Errc::ConstructionIncomplete: return "ConstructionIncomplete";
    case Errc::LeadingTermMismatch: return "LeadingTermMismatch";
    case Errc::DataIntegrityFailure: return "DataIntegrityFailure";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::NonDominantTemplate: return "NonDominantTemplate";
    case Errc::MissingMwData: return "MissingMwData";
    case Errc::NotPrime: return "NotPrime";
    case Errc::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

std::int64_t to_int64(const Integer& n) {
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer does not fit in 64 bits: " + n.str());
  return n.convert_to<std::int64_t>();
}

}  // namespace cellred
