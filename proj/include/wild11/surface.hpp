#pragma once

// Weierstrass models y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_p[t]
// of the three order-11 families, and naive point counting on them.

#include "wild11/ffield.hpp"
#include "wild11/fp_poly.hpp"

#include <climits>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wild11 {

enum class ModelKind {
  kEpsilon,  // y^2 = x^3 + eps x^2 + t^11 - t
  kGamma,    // y^2 = x^3 + gamma x + t^11 - t
  kUniform,  // y^2 + xy = x^3 + t^11
};

std::string to_string(ModelKind kind);
ModelKind parse_model_kind(const std::string& name);

struct WeierstrassCoefficients {
  FpPoly a1, a2, a3, a4, a6;
};

struct WeierstrassModel {
  std::uint64_t p = 0;
  ModelKind kind = ModelKind::kEpsilon;
  std::uint64_t param = 0;  // eps or gamma; 0 for the uniform model
  WeierstrassCoefficients finite;
  // s = 1/t, x = X/s^4, y = Y/s^6, equation times s^12: a_i(s) = s^{2i} a_i(1/s).
  WeierstrassCoefficients infinity;
};

WeierstrassModel make_model(ModelKind kind, std::uint64_t param, std::uint64_t p);

struct Invariants {
  FpPoly c4;
  FpPoly delta;
};

/// c4 = b2^2 - 24 b4 and Delta = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6.
Invariants c4_delta(const WeierstrassCoefficients& w);
Invariants c4_delta(const WeierstrassModel& model);
Invariants c4_delta_at_infinity(const WeierstrassModel& model);

inline constexpr int kInfiniteValuation = INT_MAX;

/// A point of P^1 over F_p where the fibre is singular.
struct FiberPlace {
  enum class Where { kRational, kClosedPoint, kInfinity };

  Where where = Where::kRational;
  std::uint64_t t0 = 0;  // kRational only
  FpPoly factor;         // monic irreducible factor of Delta (t - t0 when rational)
  int degree = 1;        // number of geometric points
  int vdelta = 0;
  int vc4 = 0;  // kInfiniteValuation when c4 vanishes identically

  std::string label() const;
};

/// All places with v(Delta) >= 1, finite ones first in factor order, then
/// infinity. Requires odd p and Delta not identically zero.
std::vector<FiberPlace> singular_places(const WeierstrassModel& model);

/// Projective F_q-points on the Weierstrass cubic over t0 (nullopt = t at
/// infinity, using the s-chart at s = 0). Odd characteristic only.
std::uint64_t fiber_count(const WeierstrassModel& model, const std::optional<FieldElement>& t0, const FieldSpec& spec);
/// Same, reusing chi = quadratic_character_table(spec) across calls.
std::uint64_t fiber_count(const WeierstrassModel& model, const std::optional<FieldElement>& t0, const FieldSpec& spec,
                          const std::vector<std::int8_t>& chi);

/// Sum of fiber_count over P^1(F_q). Refuses models with a fibre that is
/// not of type I_1 or II, where the cubic undercounts the smooth surface.
std::uint64_t surface_count(const WeierstrassModel& model, const FieldSpec& spec);

}  // namespace wild11
