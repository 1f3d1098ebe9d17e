#include "wild11/numeric.hpp"

#include "wild11/errors.hpp"

namespace wild11 {

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& r) {
  if (is_integer(r)) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator in '" + text + "'");
    return Rational(BigInt(text.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    throw UsageError("not a rational number: '" + text + "'");
  }
}

int valuation(const BigInt& v, std::uint64_t p) {
  if (v == 0) throw UsageError("valuation of zero");
  BigInt x = v;
  int k = 0;
  while (x % p == 0) {
    x /= p;
    ++k;
  }
  return k;
}

int valuation(const Rational& r, std::uint64_t p) {
  return valuation(boost::multiprecision::numerator(r), p) - valuation(boost::multiprecision::denominator(r), p);
}

BigInt ipow(const BigInt& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t totient(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace wild11
