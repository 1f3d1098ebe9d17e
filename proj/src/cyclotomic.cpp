#include "wild11/cyclotomic.hpp"

#include "wild11/errors.hpp"

#include <algorithm>
#include <sstream>

namespace wild11 {
namespace {

int mod11(std::int64_t k) { return static_cast<int>(((k % kCycOrder) + kCycOrder) % kCycOrder); }

}  // namespace

CycNum::CycNum(const Rational& r) { coords_[0] = r; }

CycNum CycNum::zeta_power(std::int64_t k) {
  std::array<Rational, kCycOrder> e{};
  e[mod11(k)] = 1;
  return from_redundant(e);
}

CycNum CycNum::from_redundant(const std::array<Rational, kCycOrder>& e) {
  std::array<Rational, kCycDegree> c;
  for (int j = 0; j < kCycDegree; ++j) c[j] = e[j] - e[kCycDegree];
  return CycNum(c);
}

bool CycNum::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool CycNum::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return is_integer(c); });
}

CycNum& CycNum::operator+=(const CycNum& o) {
  for (int j = 0; j < kCycDegree; ++j) coords_[j] += o.coords_[j];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  for (int j = 0; j < kCycDegree; ++j) coords_[j] -= o.coords_[j];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  std::array<Rational, kCycOrder> e{};
  for (int i = 0; i < kCycDegree; ++i) {
    if (coords_[i] == 0) continue;
    for (int j = 0; j < kCycDegree; ++j) {
      if (o.coords_[j] == 0) continue;
      e[(i + j) % kCycOrder] += coords_[i] * o.coords_[j];
    }
  }
  *this = from_redundant(e);
  return *this;
}

CycNum operator-(CycNum a) {
  for (auto& c : a.coords_) c = -c;
  return a;
}

CycNum operator/(CycNum a, const Rational& d) {
  if (d == 0) throw UsageError("division of a cyclotomic number by zero");
  for (auto& c : a.coords_) c /= d;
  return a;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int j = 0; j < kCycDegree; ++j) os << (j ? "," : "") << wild11::to_string(coords_[j]);
  os << ")";
  return os.str();
}

CycNum cyc_add(const CycNum& a, const CycNum& b) { return a + b; }
CycNum cyc_neg(const CycNum& a) { return -a; }
CycNum cyc_mul(const CycNum& a, const CycNum& b) { return a * b; }

CycNum galois_apply(std::int64_t s, const CycNum& a) {
  if (mod11(s) == 0) throw UsageError("Galois exponent must be a unit mod 11");
  std::array<Rational, kCycOrder> e{};
  for (int j = 0; j < kCycDegree; ++j) e[mod11(s * j)] += a[j];
  return CycNum::from_redundant(e);
}

std::optional<Rational> as_rational(const CycNum& a) {
  for (int j = 1; j < kCycDegree; ++j)
    if (a[j] != 0) return std::nullopt;
  return a[0];
}

CycNum EigenTraces::sum() const {
  CycNum s;
  for (const auto& v : a) s += v;
  return s;
}

EigenTraces inverse_dft(const std::array<BigInt, kCycOrder>& traces, std::uint64_t q) {
  BigInt total = 0;
  for (const auto& t : traces) total += t;
  if (total != BigInt(22) * q) {
    throw InconsistencyError("a_0 = " + to_string(Rational(total, 11)) + " but must equal 2q = " +
                             std::to_string(2 * q));
  }
  EigenTraces out;
  out.q = q;
  for (int i = 1; i <= kCycDegree; ++i) {
    std::array<Rational, kCycOrder> e{};
    for (int n = 0; n < kCycOrder; ++n) e[mod11(-static_cast<std::int64_t>(n) * i)] += Rational(traces[n]);
    CycNum ai = CycNum::from_redundant(e) / Rational(kCycOrder);
    if (!ai.is_integral()) throw InconsistencyError("a_" + std::to_string(i) + " is not in Z[zeta]: " + ai.to_string());
    out.a[i - 1] = std::move(ai);
  }
  return out;
}

std::array<BigInt, kCycOrder> forward_dft(const EigenTraces& e) {
  std::array<BigInt, kCycOrder> traces;
  for (int n = 0; n < kCycOrder; ++n) {
    CycNum t(Rational(2 * e.q));
    for (int i = 1; i <= kCycDegree; ++i) t += CycNum::zeta_power(static_cast<std::int64_t>(n) * i) * e.at(i);
    const auto r = as_rational(t);
    if (!r || !is_integer(*r)) throw InconsistencyError("reconstructed trace is not an integer");
    traces[n] = boost::multiprecision::numerator(*r);
  }
  return traces;
}

bool is_galois_stable(const EigenTraces& e) {
  std::vector<CycNum> base(e.a.begin(), e.a.end());
  std::sort(base.begin(), base.end());
  for (int s = 2; s < kCycOrder; ++s) {
    std::vector<CycNum> image;
    for (const auto& v : e.a) image.push_back(galois_apply(s, v));
    std::sort(image.begin(), image.end());
    if (image != base) return false;
  }
  return true;
}

std::optional<std::array<int, kCycDegree>> galois_permutation(const EigenTraces& e, std::int64_t s) {
  std::array<int, kCycDegree> perm{};
  std::array<bool, kCycDegree> used{};
  for (int i = 0; i < kCycDegree; ++i) {
    const CycNum img = galois_apply(s, e.a[i]);
    bool found = false;
    for (int j = 0; j < kCycDegree && !found; ++j) {
      if (!used[j] && e.a[j] == img) {
        used[j] = true;
        perm[i] = j + 1;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return perm;
}

}  // namespace wild11
