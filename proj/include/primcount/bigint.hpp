#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace primcount {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& x) { return x.str(); }

/// Natural logarithm of a positive big integer, accurate to double precision
/// for any magnitude.
double log_big(const BigInt& x);

BigInt pow_big(long base, unsigned exponent);

}  // namespace primcount
