#pragma once

// Reading off Picard-number bound and height from Frobenius on V.

#include "wild11/equivariant.hpp"
#include "wild11/polynomial.hpp"
#include "wild11/surface.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wild11 {

/// mu~(T) = mu(pT) / p^d for monic mu of degree d; eigenvalues of absolute value 1.
RatPoly normalize(const IntPoly& mu, std::uint64_t p);
IntPoly denormalize(const RatPoly& mu_tilde, std::uint64_t p);

struct CyclotomicFactor {
  int k = 0;             // Phi_k
  int multiplicity = 0;  // exponent in mu~
};

/// Phi_k dividing mu~, over all k with phi(k) <= deg mu~ (k <= 100 suffices up to degree 20).
std::vector<CyclotomicFactor> cyclotomic_factors(const RatPoly& mu_tilde);

/// 2 + number of roots of mu of the form p * (root of unity), with multiplicity.
/// The 2 counts the fibre and zero-section classes.
int picard_upper_bound(const IntPoly& mu, std::uint64_t p);

/// Height of the formal Brauer group: 1 / (1 - s) for the least root
/// valuation s < 1, nullopt (infinite height) when every valuation is 1.
std::optional<int> height_from_newton(const IntPoly& mu, std::uint64_t p);

/// Floating-point sanity check: after dividing out cyclotomic factors
/// exactly, the remaining roots of mu~ lie within `tolerance` of |z| = 1.
bool roots_on_unit_circle(const RatPoly& mu_tilde, double tolerance = 1e-9);

struct StructuralChecks {
  bool functional_equation = false;                  // mu~ palindromic up to a global sign
  std::optional<bool> gamma_parity;                  // odd coefficients vanish (gamma kind only)
  std::optional<bool> gamma_square_identity;         // mu_{p^2}(T) = nu_p(T)^2 (gamma kind only)
  bool integrality = false;                          // mu monic in Z[T], a_i and b_i in Z[zeta]
  bool determinant = false;                          // prod b_i = +-p^20
  bool unit_circle = false;                          // advisory, floating point

  std::map<std::string, std::optional<bool>> named() const;
  bool all_passed() const;
};

StructuralChecks structural_checks(const CharPolyResult& result, ModelKind kind, std::uint64_t p);

struct AnalysisReport {
  RatPoly mu_tilde;
  int picard_upper = 0;
  int picard_lower = 2;
  std::optional<int> height;  // nullopt: infinite height (supersingular)
  NewtonPolygon newton;
  std::vector<CyclotomicFactor> cyclotomic;
  std::optional<int> palindrome;
  StructuralChecks checks;
};

AnalysisReport analyze(const CharPolyResult& result, ModelKind kind);

std::string height_to_string(const std::optional<int>& height);

}  // namespace wild11
