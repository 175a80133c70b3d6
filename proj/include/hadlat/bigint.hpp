#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hadlat {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// n choose k, exact.
BigInt binomial(uint64_t n, uint64_t k);

// log2 of a positive integer, accurate to double precision.
double log2_value(const BigInt& x);

// Largest r with r^k <= x.  Requires x >= 0, k >= 1.
BigInt integer_kth_root(const BigInt& x, unsigned k);

// Parses "0.25", ".5", "3", or "p/q" into an exact rational.
BigRational rational_from_string(const std::string& text);

double rational_to_double(const BigRational& x);

}  // namespace hadlat
