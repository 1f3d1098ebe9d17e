#pragma once

// Prime fields F_p and small extensions F_{p^r} = F_p[u]/(m(u)).

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wild11 {

inline constexpr int kMaxExtensionDegree = 4;
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

// Coordinates w.r.t. the power basis 1, u, ..., u^{r-1}. Unused slots are 0.
struct FieldElement {
  std::array<std::uint32_t, kMaxExtensionDegree> coords{};

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// Description of F_q, q = p^r, with a fixed monic irreducible modulus.
///
/// r = 2 always uses u^2 - n with n the smallest quadratic non-residue, so
/// element coordinates are reproducible across runs. For r = 3, 4 the
/// modulus is the first irreducible one in base-p counting order of its
/// lower coefficients.
class FieldSpec {
 public:
  static FieldSpec prime(std::uint64_t p);
  static FieldSpec extension(std::uint64_t p, int r);

  // `modulus` lists the non-leading coefficients c_0..c_{r-1} of the monic
  // polynomial u^r + c_{r-1} u^{r-1} + ... + c_0. Irreducibility is verified.
  FieldSpec(std::uint64_t p, std::vector<std::uint64_t> modulus);

  std::uint64_t p() const { return p_; }
  int r() const { return r_; }
  std::uint64_t q() const { return q_; }
  std::span<const std::uint64_t> modulus() const { return modulus_; }

  FieldElement zero() const { return {}; }
  FieldElement one() const { return from_base(1); }
  FieldElement from_base(std::uint64_t a) const;
  // The class of u in F_p[u]/(m); equals from_base(0) + 1*u.
  FieldElement generator() const;
  FieldElement make(std::span<const std::uint64_t> coords) const;

  // Bijection F_q <-> [0, q): index = sum coords[j] p^j.
  std::uint64_t index(const FieldElement& x) const;
  FieldElement at(std::uint64_t index) const;

  bool contains(const FieldElement& x) const;
  bool is_base(const FieldElement& x) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement scale(const FieldElement& a, std::uint64_t k) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  FieldElement inverse(const FieldElement& a) const;

  std::string to_string(const FieldElement& x) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  std::uint64_t p_;
  int r_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
};

/// Least n >= 2 that is not a square mod p. Requires p an odd prime.
std::uint64_t smallest_nonresidue(std::uint64_t p);

/// Tr_{F_q/F_p}(x) = x + x^p + ... + x^{p^{r-1}}, returned as a residue.
std::uint64_t trace_to_base(const FieldElement& x, const FieldSpec& spec);

/// 0 for x = 0, +1 for a non-zero square, -1 otherwise; via x^{(q-1)/2}.
int quadratic_character(const FieldElement& x, const FieldSpec& spec);

FieldElement frobenius(const FieldElement& x, const FieldSpec& spec);

// Tables indexed by FieldSpec::index, for enumeration loops.
std::vector<std::int8_t> quadratic_character_table(const FieldSpec& spec);
std::vector<std::uint32_t> trace_table(const FieldSpec& spec);

}  // namespace wild11
