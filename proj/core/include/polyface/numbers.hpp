#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace polyface {

/// Arbitrary-precision integer (GMP-backed).
using Int = boost::multiprecision::mpz_int;
/// Arbitrary-precision rational, always kept in canonical form (GMP-backed).
using Rat = boost::multiprecision::mpq_rational;

inline constexpr std::string_view kVersion = "0.1.0";

std::string to_string(const Int& v);

/// Renders "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rat& v);

/// Parses an integer or a "p/q" rational. Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rat parse_rational(std::string_view text);

bool is_integer(const Rat& v);

/// Throws std::runtime_error if v has a nontrivial denominator.
Int to_integer(const Rat& v);

}  // namespace polyface
