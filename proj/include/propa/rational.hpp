#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "propa/types.hpp"

namespace propa {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Serializes as "p/q" in lowest terms with q >= 1. Integers keep the "/1"
// suffix so the format has a single shape and round-trips byte-for-byte.
std::string to_fraction_string(const Rational& value);

// Accepts "p/q" or a bare integer "p", optional leading '-'. Throws
// validation_error on anything else, including a zero denominator.
Rational fraction_from_string(const std::string& text);

double to_double(const Rational& value);

bool is_integral(const Rational& value);

BigInt factorial(unsigned n);

}  // namespace propa
