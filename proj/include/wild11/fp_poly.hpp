#pragma once

// Polynomials in t over F_p, the coefficient ring of Weierstrass models.

#include "wild11/ffield.hpp"
#include "wild11/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wild11 {

class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(std::uint64_t p, std::vector<std::int64_t> coeffs);  // reduced mod p, constant first

  static FpPoly constant(std::uint64_t p, std::int64_t c) { return FpPoly(p, {c}); }
  static FpPoly monomial(std::uint64_t p, std::int64_t c, int degree);
  static FpPoly t(std::uint64_t p) { return monomial(p, 1, 1); }

  std::uint64_t p() const { return p_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  std::uint64_t coeff(int j) const { return j >= 0 && j <= degree() ? coeffs_[j] : 0; }
  std::uint64_t leading() const { return coeffs_.back(); }

  FpPoly monic() const;
  FpPoly derivative() const;
  FpPoly scaled(std::uint64_t c) const;

  // s^weight f(1/s); requires deg f <= weight.
  FpPoly reversed(int weight) const;

  std::uint64_t operator()(std::uint64_t x) const;
  FieldElement operator()(const FieldElement& x, const FieldSpec& spec) const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(std::int64_t c, const FpPoly& a);
  friend bool operator==(const FpPoly&, const FpPoly&) = default;
  friend bool operator<(const FpPoly& a, const FpPoly& b);

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();

  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> coeffs_;
};

struct FpDivMod {
  FpPoly quotient;
  FpPoly remainder;
};

FpDivMod divmod(const FpPoly& num, const FpPoly& den);
FpPoly gcd(FpPoly a, FpPoly b);  // monic, or zero when both are zero
FpPoly pow_mod(FpPoly base, const BigInt& exp, const FpPoly& modulus);
FpPoly pow(FpPoly base, unsigned exp);

/// Largest m with f^m | g; g must be nonzero, f non-constant.
int valuation(const FpPoly& g, const FpPoly& f);

struct FpFactor {
  FpPoly factor;  // monic irreducible
  int multiplicity = 0;
};

/// Complete factorization over F_p for odd p, factors sorted by (degree,
/// coefficients). Deterministic: the equal-degree splitter uses a fixed seed.
std::vector<FpFactor> factor(const FpPoly& f);

/// Roots in F_p of a nonzero polynomial, ascending, without multiplicity.
std::vector<std::uint64_t> roots(const FpPoly& f);

}  // namespace wild11
