#pragma once

// Frobenius on H^2 of X_eps / X_gamma in characteristic 11 from F_11 and
// F_121 enumeration only. The order-11 translation phi: t -> t + 1 commutes
// with Frobenius, so each affine pair (x, y) in F_q^2 lands in exactly one
// fixed locus Fix(phi^n o Frob_q), selected by the trace of c = t^p - t.

#include "wild11/cyclotomic.hpp"
#include "wild11/ffield.hpp"
#include "wild11/polynomial.hpp"
#include "wild11/surface.hpp"

#include <array>
#include <cstdint>

namespace wild11 {

inline constexpr std::uint64_t kWildCharacteristic = 11;

// kTrace is the mis-signed convention; it exists for negative controls only.
enum class BucketSign { kNegatedTrace, kTrace };

struct FixTally {
  std::uint64_t q = 0;
  std::array<std::uint64_t, kCycOrder> fix{};  // #Fix(phi^n o Frob_q), n = 0..10

  BigInt total() const;
};

/// Every bucket starts at 2q + 1 (zero section and fibre at infinity); each
/// (x, y) in F_q^2 adds p to bucket n = -Tr(y^2 - x^3 - eps x^2) mod 11
/// (gamma kind: y^2 - x^3 - gamma x). Requires p = 11 and q in {11, 121}.
FixTally fixed_locus_tally(const WeierstrassModel& model, const FieldSpec& spec,
                           BucketSign sign = BucketSign::kNegatedTrace);

/// Lefschetz: tr_n = Fix_n - 1 - q^2.
std::array<BigInt, kCycOrder> traces_from_tally(const FixTally& tally);

/// Frobenius on V_i: T^2 - a_i(p) T + b_i, b_i = (a_i(p)^2 - a_i(p^2)) / 2.
struct EigenspaceFactor {
  CycNum a_p;
  CycNum a_p2;
  CycNum b;
};

struct CharPolyResult {
  std::uint64_t p = 0;
  IntPoly mu;       // degree 20, Frobenius on V = U^perp
  IntPoly mu_full;  // (T - p)^2 mu, Frobenius on all of H^2
  std::array<EigenspaceFactor, kCycDegree> per_eigenspace;
  BigInt determinant;  // prod b_i
};

/// Expands prod_i (T^2 - a_i T + b_i) in Q(zeta)[T]. Throws
/// InconsistencyError if some b_i is not in Z[zeta] or a coefficient of the
/// product is not a rational integer.
CharPolyResult assemble_charpoly(const EigenTraces& at_p, const EigenTraces& at_p2, std::uint64_t p);

/// Characteristic polynomial of Frob_{p^2} on V: prod_i (T^2 - a_i(p^2) T + b_i^2).
IntPoly charpoly_over_p2(const CharPolyResult& result);

/// Everything computed for one surface.
struct FrobeniusData {
  FixTally tally_p;
  FixTally tally_p2;
  std::array<BigInt, kCycOrder> traces_p;
  std::array<BigInt, kCycOrder> traces_p2;
  EigenTraces eigen_p;
  EigenTraces eigen_p2;
  CharPolyResult charpoly;
};

/// Runs both tallies (concurrently when more than one worker is available),
/// the inverse DFT at q = p and q = p^2, and the assembly.
FrobeniusData compute_frobenius(const WeierstrassModel& model, BucketSign sign = BucketSign::kNegatedTrace);

}  // namespace wild11
