#pragma once

// Exact arithmetic in Q(zeta), zeta a primitive 11th root of unity.

#include "wild11/numeric.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wild11 {

inline constexpr int kCycOrder = 11;
inline constexpr int kCycDegree = 10;

/// c_0 + c_1 zeta + ... + c_9 zeta^9, reduced with
/// zeta^10 = -(1 + zeta + ... + zeta^9). The representation is unique.
class CycNum {
 public:
  CycNum() = default;
  CycNum(const Rational& r);  // NOLINT(google-explicit-constructor): rationals embed
  CycNum(int v) : CycNum(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  explicit CycNum(const std::array<Rational, kCycDegree>& coords) : coords_(coords) {}

  static CycNum zeta_power(std::int64_t k);
  // Sum e_k zeta^k over k = 0..10, reduced to the power basis.
  static CycNum from_redundant(const std::array<Rational, kCycOrder>& e);

  const std::array<Rational, kCycDegree>& coords() const { return coords_; }
  const Rational& operator[](int j) const { return coords_[j]; }

  bool is_zero() const;
  bool is_integral() const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator-(CycNum a);
  friend CycNum operator/(CycNum a, const Rational& d);
  friend bool operator==(const CycNum&, const CycNum&) = default;
  friend bool operator<(const CycNum& a, const CycNum& b) { return a.coords_ < b.coords_; }

  std::string to_string() const;

 private:
  std::array<Rational, kCycDegree> coords_{};
};

CycNum cyc_add(const CycNum& a, const CycNum& b);
CycNum cyc_neg(const CycNum& a);
CycNum cyc_mul(const CycNum& a, const CycNum& b);

/// Image under zeta -> zeta^s; s must be a unit mod 11.
CycNum galois_apply(std::int64_t s, const CycNum& a);

/// The rational value when c_1..c_9 vanish.
std::optional<Rational> as_rational(const CycNum& a);

/// Relative Frobenius traces a_1(q)..a_10(q) on the zeta^i-eigenspaces.
struct EigenTraces {
  std::uint64_t q = 0;
  std::array<CycNum, kCycDegree> a;  // a[i-1] holds a_i

  const CycNum& at(int i) const { return a.at(i - 1); }
  CycNum sum() const;
};

/// Recover a_i = (1/11) sum_n zeta^{-ni} tr_n. Requires a_0 = 2q and every
/// a_i in Z[zeta]; throws InconsistencyError otherwise.
EigenTraces inverse_dft(const std::array<BigInt, kCycOrder>& traces, std::uint64_t q);

/// tr_n = 2q + sum_i zeta^{ni} a_i, which must be rational for each n.
std::array<BigInt, kCycOrder> forward_dft(const EigenTraces& e);

/// Multiset {a_i} is mapped onto itself by zeta -> zeta^s for every s.
bool is_galois_stable(const EigenTraces& e);

/// perm[i-1] = j with galois_apply(s, a_i) = a_j, when such an assignment
/// exists with distinct j (first match wins for repeated values).
std::optional<std::array<int, kCycDegree>> galois_permutation(const EigenTraces& e, std::int64_t s);

}  // namespace wild11
