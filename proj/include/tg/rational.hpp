#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tg {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational; always stored in lowest terms with positive denominator.
using Rat = boost::multiprecision::cpp_rational;

// Accepts "p/q", integer literals, and decimal literals ("1.98" -> 99/50).
Rat parse_rational(const std::string& text);

// Canonical textual form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& value);

}  // namespace tg
