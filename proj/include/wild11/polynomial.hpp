#pragma once

// Dense univariate polynomials over an exact scalar ring, constant term first.

#include "wild11/cyclotomic.hpp"
#include "wild11/errors.hpp"
#include "wild11/numeric.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace wild11 {

template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }
  static Polynomial monomial(const Scalar& c, int degree) {
    std::vector<Scalar> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(int j) const { return j >= 0 && j <= degree() ? coeffs_[j] : Scalar{}; }
  const Scalar& leading() const { return coeffs_.back(); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == Scalar{}) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const Scalar& s, Polynomial a) {
    for (auto& c : a.coeffs_) c = s * c;
    a.trim();
    return a;
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Scalar operator()(const Scalar& x) const {
    Scalar acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  // f(c T).
  Polynomial scale_variable(const Scalar& c) const {
    std::vector<Scalar> out = coeffs_;
    Scalar power = Scalar(1);
    for (auto& v : out) {
      v = v * power;
      power = power * c;
    }
    return Polynomial(std::move(out));
  }

  // f(T^k).
  Polynomial inflate(int k) const {
    if (is_zero()) return {};
    std::vector<Scalar> out(degree() * k + 1);
    for (int j = 0; j <= degree(); ++j) out[j * k] = coeffs_[j];
    return Polynomial(std::move(out));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar{}) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using IntPoly = Polynomial<BigInt>;
using RatPoly = Polynomial<Rational>;
using CycPoly = Polynomial<CycNum>;

template <typename Scalar>
Polynomial<Scalar> pow(Polynomial<Scalar> base, unsigned exp) {
  Polynomial<Scalar> result = Polynomial<Scalar>::constant(Scalar(1));
  while (exp > 0) {
    if (exp & 1u) result *= base;
    base *= base;
    exp >>= 1u;
  }
  return result;
}

/// Long division over a field: returns (quotient, remainder).
std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den);

RatPoly to_rational(const IntPoly& f);
/// Throws InconsistencyError if a coefficient is not an integer.
IntPoly to_integer(const RatPoly& f);

std::string format_poly(const RatPoly& f, const std::string& var = "T");
std::string format_poly(const IntPoly& f, const std::string& var = "T");

/// Phi_k by exact division of T^k - 1 by Phi_d for proper divisors d of k.
IntPoly cyclotomic_poly(int k);

/// Largest m with f^m | g. g = 0 is rejected as well, since every power divides it.
int divides_with_multiplicity(const RatPoly& f, const RatPoly& g);

struct Slope {
  Rational valuation;  // p-adic valuation of each root on this segment
  int multiplicity = 0;
  friend bool operator==(const Slope&, const Slope&) = default;
};

struct NewtonPolygon {
  std::uint64_t p = 0;
  std::vector<std::pair<int, int>> points;  // (j, v_p(c_j)) for c_j != 0
  std::vector<std::pair<int, int>> hull;    // lower convex hull, left to right
  std::vector<Slope> slopes;                // root valuations, ascending

  Rational min_valuation() const { return slopes.front().valuation; }
  int total_multiplicity() const;
};

/// Root valuations of f at p from the lower hull of (j, v_p(c_j)).
NewtonPolygon newton_polygon(const IntPoly& f, std::uint64_t p);

/// +1 if c_j = c_{d-j} for all j, -1 if c_j = -c_{d-j}, nullopt otherwise.
std::optional<int> palindrome_sign(const RatPoly& f);

}  // namespace wild11
