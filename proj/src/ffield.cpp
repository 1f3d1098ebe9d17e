#include "wild11/ffield.hpp"

#include "wild11/errors.hpp"
#include "wild11/numeric.hpp"

#include <sstream>

namespace wild11 {
namespace {

using Coeffs = std::vector<std::uint64_t>;

// Remainder of a monic-free polynomial `num` modulo monic `den` over F_p
// (both constant term first, den includes its leading 1).
Coeffs poly_mod(Coeffs num, const Coeffs& den, std::uint64_t p) {
  const std::size_t d = den.size() - 1;
  while (num.size() > d) {
    const std::uint64_t lead = num.back() % p;
    const std::size_t shift = num.size() - 1 - d;
    if (lead != 0) {
      for (std::size_t j = 0; j <= d; ++j) {
        num[shift + j] = (num[shift + j] + p * p - lead * den[j] % p) % p;
      }
    }
    num.pop_back();
  }
  return num;
}

bool is_zero(const Coeffs& c) {
  for (auto v : c)
    if (v != 0) return false;
  return true;
}

// True iff some monic polynomial of degree 1..r/2 divides the modulus.
bool has_small_factor(const Coeffs& full, std::uint64_t p) {
  const int r = static_cast<int>(full.size()) - 1;
  for (int d = 1; 2 * d <= r; ++d) {
    std::uint64_t count = 1;
    for (int j = 0; j < d; ++j) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
      Coeffs div(d + 1);
      std::uint64_t m = k;
      for (int j = 0; j < d; ++j) {
        div[j] = m % p;
        m /= p;
      }
      div[d] = 1;
      if (is_zero(poly_mod(full, div, p))) return true;
    }
  }
  return false;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw UsageError("characteristic " + std::to_string(p) + " is not prime");
}

std::uint64_t checked_order(std::uint64_t p, int r) {
  if (r < 1) throw UsageError("extension degree must be >= 1");
  if (r > kMaxExtensionDegree) {
    throw CapabilityError("extension degree " + std::to_string(r) + " exceeds supported maximum " +
                          std::to_string(kMaxExtensionDegree));
  }
  std::uint64_t q = 1;
  for (int j = 0; j < r; ++j) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw CapabilityError("field order " + std::to_string(p) + "^" + std::to_string(r) + " exceeds 2^20");
    }
  }
  return q;
}

}  // namespace

std::uint64_t smallest_nonresidue(std::uint64_t p) {
  require_prime(p);
  if (p == 2) throw UsageError("no quadratic non-residue in characteristic 2");
  std::vector<bool> square(p, false);
  for (std::uint64_t x = 1; x < p; ++x) square[x * x % p] = true;
  for (std::uint64_t n = 2; n < p; ++n) {
    if (!square[n]) return n;
  }
  throw InconsistencyError("odd prime without a non-residue");
}

FieldSpec FieldSpec::prime(std::uint64_t p) { return FieldSpec(p, {0}); }

FieldSpec FieldSpec::extension(std::uint64_t p, int r) {
  require_prime(p);
  const std::uint64_t q = checked_order(p, r);
  if (r == 1) return prime(p);
  if (r == 2 && p != 2) return FieldSpec(p, {p - smallest_nonresidue(p), 0});
  const std::uint64_t candidates = q;  // p^r choices of the lower coefficients
  for (std::uint64_t k = 0; k < candidates; ++k) {
    Coeffs full(r + 1);
    std::uint64_t m = k;
    for (int j = 0; j < r; ++j) {
      full[j] = m % p;
      m /= p;
    }
    full[r] = 1;
    if (full[0] == 0 || has_small_factor(full, p)) continue;
    full.pop_back();
    return FieldSpec(p, full);
  }
  throw InconsistencyError("no irreducible polynomial found");
}

FieldSpec::FieldSpec(std::uint64_t p, std::vector<std::uint64_t> modulus)
    : p_(p), r_(static_cast<int>(modulus.size())), modulus_(std::move(modulus)) {
  require_prime(p_);
  q_ = checked_order(p_, r_);
  for (auto& c : modulus_) {
    if (c >= p_) throw UsageError("modulus coefficient out of range");
  }
  Coeffs full = modulus_;
  full.push_back(1);
  if (r_ > 1 && (full[0] == 0 || has_small_factor(full, p_))) {
    throw UsageError("modulus is reducible over F_" + std::to_string(p_));
  }
}

FieldElement FieldSpec::from_base(std::uint64_t a) const {
  FieldElement x;
  x.coords[0] = static_cast<std::uint32_t>(a % p_);
  return x;
}

FieldElement FieldSpec::generator() const {
  if (r_ == 1) return from_base((p_ - modulus_[0]) % p_);
  FieldElement x;
  x.coords[1] = 1;
  return x;
}

FieldElement FieldSpec::make(std::span<const std::uint64_t> coords) const {
  if (static_cast<int>(coords.size()) > r_) throw UsageError("too many coordinates for F_q");
  FieldElement x;
  for (std::size_t j = 0; j < coords.size(); ++j) x.coords[j] = static_cast<std::uint32_t>(coords[j] % p_);
  return x;
}

std::uint64_t FieldSpec::index(const FieldElement& x) const {
  std::uint64_t idx = 0;
  for (int j = r_ - 1; j >= 0; --j) idx = idx * p_ + x.coords[j];
  return idx;
}

FieldElement FieldSpec::at(std::uint64_t index) const {
  FieldElement x;
  for (int j = 0; j < r_; ++j) {
    x.coords[j] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return x;
}

bool FieldSpec::contains(const FieldElement& x) const {
  for (int j = 0; j < kMaxExtensionDegree; ++j) {
    if (j >= r_ ? x.coords[j] != 0 : x.coords[j] >= p_) return false;
  }
  return true;
}

bool FieldSpec::is_base(const FieldElement& x) const {
  for (int j = 1; j < kMaxExtensionDegree; ++j)
    if (x.coords[j] != 0) return false;
  return true;
}

FieldElement FieldSpec::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement out;
  for (int j = 0; j < r_; ++j) out.coords[j] = static_cast<std::uint32_t>((a.coords[j] + b.coords[j]) % p_);
  return out;
}

FieldElement FieldSpec::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement out;
  for (int j = 0; j < r_; ++j) out.coords[j] = static_cast<std::uint32_t>((a.coords[j] + p_ - b.coords[j]) % p_);
  return out;
}

FieldElement FieldSpec::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement FieldSpec::scale(const FieldElement& a, std::uint64_t k) const {
  k %= p_;
  FieldElement out;
  for (int j = 0; j < r_; ++j) out.coords[j] = static_cast<std::uint32_t>(a.coords[j] * k % p_);
  return out;
}

FieldElement FieldSpec::mul(const FieldElement& a, const FieldElement& b) const {
  if (r_ == 1) return from_base(std::uint64_t{a.coords[0]} * b.coords[0]);
  std::array<std::uint64_t, 2 * kMaxExtensionDegree - 1> prod{};
  for (int i = 0; i < r_; ++i) {
    if (a.coords[i] == 0) continue;
    for (int j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a.coords[i]} * b.coords[j]) % p_;
  }
  // u^r = -(c_0 + ... + c_{r-1} u^{r-1})
  for (int k = 2 * r_ - 2; k >= r_; --k) {
    const std::uint64_t lead = prod[k];
    if (lead == 0) continue;
    prod[k] = 0;
    for (int j = 0; j < r_; ++j) {
      prod[k - r_ + j] = (prod[k - r_ + j] + p_ - lead * modulus_[j] % p_) % p_;
    }
  }
  FieldElement out;
  for (int j = 0; j < r_; ++j) out.coords[j] = static_cast<std::uint32_t>(prod[j]);
  return out;
}

FieldElement FieldSpec::pow(FieldElement a, std::uint64_t e) const {
  FieldElement result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

FieldElement FieldSpec::inverse(const FieldElement& a) const {
  if (a == zero()) throw UsageError("inverse of zero in F_q");
  return pow(a, q_ - 2);
}

std::string FieldSpec::to_string(const FieldElement& x) const {
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < r_; ++j) {
    if (x.coords[j] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << x.coords[j];
    if (j == 1) os << "*u";
    if (j > 1) os << "*u^" << j;
  }
  if (first) os << "0";
  return os.str();
}

FieldElement frobenius(const FieldElement& x, const FieldSpec& spec) { return spec.pow(x, spec.p()); }

std::uint64_t trace_to_base(const FieldElement& x, const FieldSpec& spec) {
  if (!spec.contains(x)) throw UsageError("element does not belong to F_q");
  FieldElement sum = x;
  FieldElement conj = x;
  for (int j = 1; j < spec.r(); ++j) {
    conj = frobenius(conj, spec);
    sum = spec.add(sum, conj);
  }
  if (!spec.is_base(sum)) throw InconsistencyError("trace left the prime field");
  return sum.coords[0];
}

int quadratic_character(const FieldElement& x, const FieldSpec& spec) {
  if (spec.p() == 2) throw CapabilityError("quadratic character in characteristic 2 is unsupported");
  if (x == spec.zero()) return 0;
  const FieldElement e = spec.pow(x, (spec.q() - 1) / 2);
  if (e == spec.one()) return 1;
  if (e == spec.from_base(spec.p() - 1)) return -1;
  throw InconsistencyError("Euler criterion produced neither +1 nor -1");
}

std::vector<std::int8_t> quadratic_character_table(const FieldSpec& spec) {
  std::vector<std::int8_t> table(spec.q());
  for (std::uint64_t i = 0; i < spec.q(); ++i) table[i] = static_cast<std::int8_t>(quadratic_character(spec.at(i), spec));
  return table;
}

std::vector<std::uint32_t> trace_table(const FieldSpec& spec) {
  std::vector<std::uint32_t> table(spec.q());
  for (std::uint64_t i = 0; i < spec.q(); ++i) table[i] = static_cast<std::uint32_t>(trace_to_base(spec.at(i), spec));
  return table;
}

}  // namespace wild11
