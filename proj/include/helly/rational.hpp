#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace helly {

// All geometric predicates and LP pivots run on exact rationals; nothing in the
// library rounds unless an operation is documented as numeric.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p/q", "-3", "7", and decimal strings like "0.25" (parsed as an exact
// decimal fraction). Throws SchemaError on anything else.
Rat parse_rational(const std::string& text);

// "p/q" for non-integers, plain integer string otherwise.
std::string rational_to_string(const Rat& value);

BigInt floor_rat(const Rat& value);
BigInt ceil_rat(const Rat& value);

double to_double(const Rat& value);

// C(n, k) as an exact big integer; 0 when k < 0 or k > n.
BigInt binomial(long long n, long long k);

}  // namespace helly
