#pragma once

// Kodaira fibre types for p >= 5 and trivial-lattice bookkeeping.

#include "wild11/fp_poly.hpp"
#include "wild11/surface.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wild11 {

struct KodairaType {
  enum class Family { kIn, kII, kIII, kIV, kInStar, kIVStar, kIIIStar, kIIStar };

  Family family = Family::kIn;
  int n = 0;  // index for I_n and I_n^*

  int components() const;
  // |disc| of the root lattice spanned by non-identity components.
  std::uint64_t lattice_discriminant() const;
  // "A_10", "D_5", "E_8"; empty when the fibre is irreducible.
  std::string lattice_label() const;
  std::string name() const;  // "I_11", "II", "I_0^*", ...

  friend bool operator==(const KodairaType&, const KodairaType&) = default;
};

/// Lookup on (v(c4), v(Delta)), valid for p >= 5 on a minimal model.
KodairaType kodaira_type(int vc4, int vdelta);

struct KodairaFiber {
  FiberPlace place;
  KodairaType type;
  int components() const { return type.components(); }
};

/// Singular fibres of `model`, closed points reported once with their degree.
/// p in {2, 3} throws CapabilityError (wild ramification at infinity).
std::vector<KodairaFiber> classify_fibers(const WeierstrassModel& model);

/// Number of geometric fibres of the given type (closed points weighted by degree).
int count_fibers(const std::vector<KodairaFiber>& fibers, const KodairaType& type);

struct WildDeltaReport {
  FpPoly delta;            // finite discriminant mod p
  int v_zero = 0;          // v_{t=0}(Delta)
  int v_infinity = 0;      // from the s-chart
  int tame_at_infinity = 0;  // Euler number of the type II fibre at infinity
  int wild_at_infinity = 0;  // v_infinity - tame_at_infinity
};

/// Discriminant bookkeeping for the uniform model in characteristic 2 or 3.
WildDeltaReport wild_delta_report(const WeierstrassModel& model);

struct LatticeSummary {
  int rank = 2;
  std::uint64_t abs_disc = 1;
  std::vector<std::string> components;
};

/// Shioda-Tate trivial lattice U + sum of fibre root lattices.
LatticeSummary trivial_lattice(const std::vector<KodairaFiber>& fibers);

/// sigma with abs_disc = p^{2 sigma} when rank = 22.
std::optional<int> artin_invariant(const LatticeSummary& lattice, std::uint64_t p);

}  // namespace wild11
