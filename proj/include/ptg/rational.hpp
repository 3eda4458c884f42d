#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace ptg {

/// Exact rational number. Always kept in lowest terms with a positive
/// denominator by the underlying GMP type.
using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Parses "7", "-3/4" or a finite decimal such as "6.9" or "-0.25" exactly.
/// Throws std::invalid_argument on anything else (including zero denominators).
Rat parse_rat(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& value);

Rat rat(long long num, long long den = 1);

Rat abs(const Rat& value);

/// 2^e for any integer e (negative exponents give fractions).
Rat pow2(int e);

}  // namespace ptg
