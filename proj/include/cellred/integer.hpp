#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace cellred {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& n) { return n.str(); }

/// Narrowing conversion that throws std::overflow_error instead of wrapping.
std::int64_t to_int64(const Integer& n);

}  // namespace cellred
