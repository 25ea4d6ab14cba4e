#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclefactor {

using BigInt = boost::multiprecision::cpp_int;

// Always normalized: denominator > 0 and gcd(numerator, denominator) = 1.
using BigRational = boost::multiprecision::cpp_rational;

BigInt factorial(int m);

// "p/q" with q >= 1; integers are still written with "/1".
std::string to_fraction_string(const BigRational& x);

// Accepts "p/q" or a bare integer.
BigRational parse_fraction(std::string_view text);

double to_double(const BigRational& x);

inline BigInt numerator_of(const BigRational& x) { return boost::multiprecision::numerator(x); }
inline BigInt denominator_of(const BigRational& x) { return boost::multiprecision::denominator(x); }

inline BigRational make_rational(const BigInt& p, const BigInt& q) { return BigRational(p, q); }

}  // namespace cyclefactor
