#include "wild11/fp_poly.hpp"

#include "wild11/errors.hpp"
#include "wild11/numeric.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace wild11 {
namespace {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw UsageError("inverse of zero mod p");
  std::uint64_t result = 1;
  std::uint64_t e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return result;
}

void require_same_field(const FpPoly& a, const FpPoly& b) {
  if (a.p() != b.p()) throw UsageError("polynomials over different prime fields");
}

}  // namespace

FpPoly::FpPoly(std::uint64_t p, std::vector<std::int64_t> coeffs) : p_(p) {
  const auto sp = static_cast<std::int64_t>(p);
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.push_back(static_cast<std::uint64_t>(((c % sp) + sp) % sp));
  trim();
}

FpPoly FpPoly::monomial(std::uint64_t p, std::int64_t c, int degree) {
  std::vector<std::int64_t> v(degree + 1, 0);
  v[degree] = c;
  return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(inv_mod(leading(), p_));
}

FpPoly FpPoly::scaled(std::uint64_t c) const {
  FpPoly out = *this;
  for (auto& v : out.coeffs_) v = v * (c % p_) % p_;
  out.trim();
  return out;
}

FpPoly FpPoly::derivative() const {
  FpPoly out;
  out.p_ = p_;
  for (int j = 1; j <= degree(); ++j) out.coeffs_.push_back(coeffs_[j] * (j % p_) % p_);
  out.trim();
  return out;
}

FpPoly FpPoly::reversed(int weight) const {
  if (degree() > weight) throw UsageError("degree exceeds chart weight");
  FpPoly out;
  out.p_ = p_;
  out.coeffs_.assign(weight + 1, 0);
  for (int j = 0; j <= degree(); ++j) out.coeffs_[weight - j] = coeffs_[j];
  out.trim();
  return out;
}

std::uint64_t FpPoly::operator()(std::uint64_t x) const {
  std::uint64_t acc = 0;
  x %= p_;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = (acc * x + *it) % p_;
  return acc;
}

FieldElement FpPoly::operator()(const FieldElement& x, const FieldSpec& spec) const {
  if (spec.p() != p_) throw UsageError("evaluation point lies in a field of different characteristic");
  FieldElement acc = spec.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = spec.add(spec.mul(acc, x), spec.from_base(*it));
  return acc;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  FpPoly out = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
  const FpPoly& other = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out.coeffs_[j] = (out.coeffs_[j] + other.coeffs_[j]) % a.p_;
  out.trim();
  return out;
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) { return a + (-1 * b); }

FpPoly operator*(std::int64_t c, const FpPoly& a) {
  const auto sp = static_cast<std::int64_t>(a.p_);
  return a.scaled(static_cast<std::uint64_t>(((c % sp) + sp) % sp));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  FpPoly out;
  out.p_ = a.p_;
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out.coeffs_[i + j] = (out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j]) % a.p_;
  }
  out.trim();
  return out;
}

bool operator<(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs_.rbegin(), a.coeffs_.rend(), b.coeffs_.rbegin(), b.coeffs_.rend());
}

std::string FpPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = degree(); j >= 0; --j) {
    const auto c = coeffs_[j];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c != 1 || j == 0) os << c;
    if (j > 0) {
      if (c != 1) os << "*";
      os << var;
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

FpDivMod divmod(const FpPoly& num, const FpPoly& den) {
  require_same_field(num, den);
  if (den.is_zero()) throw UsageError("division by the zero polynomial");
  const std::uint64_t p = num.p();
  if (num.degree() < den.degree()) return {FpPoly(p, {}), num};
  std::vector<std::int64_t> rem(num.coeffs().begin(), num.coeffs().end());
  std::vector<std::int64_t> quot(num.degree() - den.degree() + 1, 0);
  const std::uint64_t lead_inv = inv_mod(den.leading(), p);
  const int dd = den.degree();
  for (int k = num.degree(); k >= dd; --k) {
    const auto factor = static_cast<std::uint64_t>(rem[k]) % p * lead_inv % p;
    quot[k - dd] = static_cast<std::int64_t>(factor);
    if (factor == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      const auto sub = factor * den.coeff(j) % p;
      rem[k - dd + j] = static_cast<std::int64_t>((static_cast<std::uint64_t>(rem[k - dd + j]) + p - sub) % p);
    }
  }
  rem.resize(dd);
  return {FpPoly(p, std::move(quot)), FpPoly(p, std::move(rem))};
}

FpPoly gcd(FpPoly a, FpPoly b) {
  require_same_field(a, b);
  while (!b.is_zero()) {
    FpPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly pow_mod(FpPoly base, const BigInt& exp, const FpPoly& modulus) {
  FpPoly result = divmod(FpPoly::constant(base.p(), 1), modulus).remainder;
  base = divmod(base, modulus).remainder;
  const auto bits = exp == 0 ? 0u : boost::multiprecision::msb(exp) + 1;
  for (unsigned k = 0; k < bits; ++k) {
    if (boost::multiprecision::bit_test(exp, k)) result = divmod(result * base, modulus).remainder;
    base = divmod(base * base, modulus).remainder;
  }
  return result;
}

FpPoly pow(FpPoly base, unsigned exp) {
  FpPoly result = FpPoly::constant(base.p(), 1);
  while (exp > 0) {
    if (exp & 1u) result = result * base;
    base = base * base;
    exp >>= 1u;
  }
  return result;
}

int valuation(const FpPoly& g, const FpPoly& f) {
  if (g.is_zero()) throw UsageError("valuation of the zero polynomial");
  if (f.degree() < 1) throw UsageError("valuation at a constant");
  int m = 0;
  FpPoly cur = g;
  while (true) {
    auto [quot, rem] = divmod(cur, f);
    if (!rem.is_zero()) return m;
    cur = std::move(quot);
    ++m;
  }
}

namespace {

// f(t) = g(t^p) -> g(t); coefficients are fixed by Frobenius on F_p.
FpPoly pth_root(const FpPoly& f) {
  const auto p = f.p();
  std::vector<std::int64_t> c;
  for (int j = 0; j <= f.degree(); j += static_cast<int>(p)) c.push_back(static_cast<std::int64_t>(f.coeff(j)));
  return FpPoly(p, std::move(c));
}

// Square-free factorization of a monic polynomial: (g, m) with f = prod g^m.
void squarefree(const FpPoly& f, int scale, std::vector<FpFactor>& out) {
  if (f.degree() < 1) return;
  const FpPoly d = f.derivative();
  if (d.is_zero()) {
    squarefree(pth_root(f), scale * static_cast<int>(f.p()), out);
    return;
  }
  FpPoly c = gcd(f, d);
  FpPoly w = divmod(f, c).quotient;
  int i = 1;
  while (!w.is_one()) {
    FpPoly y = gcd(w, c);
    FpPoly fac = divmod(w, y).quotient;
    if (fac.degree() > 0) out.push_back({fac.monic(), i * scale});
    w = y;
    c = divmod(c, y).quotient;
    ++i;
  }
  if (c.degree() > 0) squarefree(pth_root(c.monic()), scale * static_cast<int>(f.p()), out);
}

std::vector<std::pair<FpPoly, int>> distinct_degree(FpPoly f) {
  std::vector<std::pair<FpPoly, int>> out;
  const auto p = f.p();
  const FpPoly t = FpPoly::t(p);
  FpPoly h = t;  // t^{p^i} mod f
  for (int i = 1; f.degree() >= 2 * i; ++i) {
    h = pow_mod(h, BigInt(p), f);
    FpPoly g = gcd(f, h - t);
    if (!g.is_one()) {
      out.emplace_back(g, i);
      f = divmod(f, g).quotient;
      h = divmod(h, f).remainder;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
  return out;
}

void equal_degree(const FpPoly& f, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const auto p = f.p();
  if (p == 2) throw CapabilityError("equal-degree splitting in characteristic 2 is unsupported");
  const BigInt exponent = (ipow(BigInt(p), static_cast<unsigned>(d)) - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  while (true) {
    std::vector<std::int64_t> c(f.degree());
    for (auto& v : c) v = static_cast<std::int64_t>(coeff(rng));
    FpPoly a(p, std::move(c));
    if (a.degree() < 1) continue;
    FpPoly g = gcd(f, a);
    if (g.is_one()) g = gcd(f, pow_mod(a, exponent, f) - FpPoly::constant(p, 1));
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(divmod(f, g).quotient, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<FpFactor> factor(const FpPoly& f) {
  if (f.is_zero()) throw UsageError("cannot factor the zero polynomial");
  std::vector<FpFactor> sqf;
  squarefree(f.monic(), 1, sqf);
  std::mt19937_64 rng(0x5eed11u);
  std::vector<FpFactor> out;
  for (const auto& [g, m] : sqf) {
    for (const auto& [h, d] : distinct_degree(g)) {
      std::vector<FpPoly> irreducibles;
      equal_degree(h, d, rng, irreducibles);
      for (auto& pi : irreducibles) out.push_back({std::move(pi), m});
    }
  }
  // The square-free pass can report one irreducible under several
  // multiplicities (p-th power branches); merge them.
  std::sort(out.begin(), out.end(), [](const FpFactor& a, const FpFactor& b) { return a.factor < b.factor; });
  std::vector<FpFactor> merged;
  for (auto& fac : out) {
    if (!merged.empty() && merged.back().factor == fac.factor)
      merged.back().multiplicity += fac.multiplicity;
    else
      merged.push_back(std::move(fac));
  }
  return merged;
}

std::vector<std::uint64_t> roots(const FpPoly& f) {
  if (f.is_zero()) throw UsageError("roots of the zero polynomial");
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < f.p(); ++x)
    if (f(x) == 0) out.push_back(x);
  return out;
}

}  // namespace wild11
