#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace wild11 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

// "num/den", or "num" when the denominator is one.
std::string to_string(const BigInt& v);
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

// Exponent of p in v; v must be nonzero.
int valuation(const BigInt& v, std::uint64_t p);
int valuation(const Rational& r, std::uint64_t p);

BigInt ipow(const BigInt& base, unsigned exp);

bool is_prime(std::uint64_t n);

// Euler's totient.
std::uint64_t totient(std::uint64_t n);

}  // namespace wild11
