#pragma once

// The uniform surface y^2 + xy = x^3 + t^11 as a quotient of the degree-11
// Fermat surface u^11 + v^11 + w^11 + 1 = 0.

#include "wild11/numeric.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace wild11 {

using Exponent = std::array<int, 3>;  // powers of u, v, w

/// Sparse polynomial in u, v, w with integer coefficients. Terms are ordered
/// lexicographically with u > v > w; zero coefficients are never stored.
class MultiPoly {
 public:
  MultiPoly() = default;
  static MultiPoly term(const BigInt& c, Exponent e);
  static MultiPoly constant(const BigInt& c) { return term(c, {0, 0, 0}); }

  const std::map<Exponent, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::pair<Exponent, BigInt> leading() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a) { return MultiPoly() - a; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly reduced_mod(std::uint64_t p) const;
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const BigInt& c);

  std::map<Exponent, BigInt> terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned exp);

struct MultiDivision {
  MultiPoly quotient;
  MultiPoly remainder;
};

/// Division by a single polynomial with unit leading coefficient.
MultiDivision divide(const MultiPoly& num, const MultiPoly& den);

struct CoverMap {
  MultiPoly x, y, t;
};

/// (x, y, t) = (-u^11 v^11, -u^22 v^11, -w u^3 v^2).
CoverMap fermat_cover_map();
MultiPoly fermat_relation();  // u^11 + v^11 + w^11 + 1

/// y^2 + xy - x^3 - t^11 after substituting the map.
MultiPoly substitute_uniform(const CoverMap& map);

struct CoverCheck {
  bool verified = false;
  MultiPoly substituted;
  MultiPoly quotient;   // cofactor of the Fermat relation
  MultiPoly remainder;
};

CoverCheck verify_cover_identity(const CoverMap& map = fermat_cover_map());

/// p = 11, or p^nu = -1 mod 11 for some nu (order of p mod 11 is even).
/// Cross-checked against "p is a non-square mod 11".
bool supersingular_possible(std::uint64_t p);

bool is_nonsquare_mod_11(std::uint64_t p);

}  // namespace wild11
