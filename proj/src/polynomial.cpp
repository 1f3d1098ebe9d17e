#include "wild11/polynomial.hpp"

#include <algorithm>

namespace wild11 {

std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw UsageError("polynomial division by zero");
  std::vector<Rational> rem = num.coeffs();
  const int dd = den.degree();
  if (num.degree() < dd) return {RatPoly{}, num};
  std::vector<Rational> quot(num.degree() - dd + 1);
  for (int k = num.degree(); k >= dd; --k) {
    const Rational factor = rem[k] / den.leading();
    quot[k - dd] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= factor * den.coeff(j);
  }
  rem.resize(dd);
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly to_rational(const IntPoly& f) {
  std::vector<Rational> c;
  for (const auto& v : f.coeffs()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

IntPoly to_integer(const RatPoly& f) {
  std::vector<BigInt> c;
  for (const auto& v : f.coeffs()) {
    if (!is_integer(v)) throw InconsistencyError("non-integral coefficient " + to_string(v));
    c.push_back(boost::multiprecision::numerator(v));
  }
  return IntPoly(std::move(c));
}

namespace {

template <typename Scalar>
std::string format_impl(const Polynomial<Scalar>& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = f.degree(); j >= 0; --j) {
    Scalar c = f.coeff(j);
    if (c == Scalar{}) continue;
    const bool negative = c < Scalar{};
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = c == Scalar(1);
    if (!unit || j == 0) os << to_string(c);
    if (j > 0) {
      if (!unit) os << "*";
      os << var;
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

}  // namespace

std::string format_poly(const RatPoly& f, const std::string& var) { return format_impl(f, var); }
std::string format_poly(const IntPoly& f, const std::string& var) { return format_impl(f, var); }

IntPoly cyclotomic_poly(int k) {
  if (k < 1) throw UsageError("cyclotomic index must be positive");
  RatPoly f = RatPoly::monomial(1, k) - RatPoly::constant(1);
  for (int d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    auto [quot, rem] = divmod(f, to_rational(cyclotomic_poly(d)));
    if (!rem.is_zero()) throw InconsistencyError("Phi_d does not divide T^k - 1");
    f = std::move(quot);
  }
  return to_integer(f);
}

int divides_with_multiplicity(const RatPoly& f, const RatPoly& g) {
  if (f.is_zero()) throw UsageError("divisor polynomial is zero");
  if (g.is_zero()) throw UsageError("multiplicity in the zero polynomial is unbounded");
  if (f.degree() == 0) throw UsageError("multiplicity of a constant divisor is unbounded");
  int m = 0;
  RatPoly cur = g;
  while (true) {
    auto [quot, rem] = divmod(cur, f);
    if (!rem.is_zero()) return m;
    cur = std::move(quot);
    ++m;
  }
}

int NewtonPolygon::total_multiplicity() const {
  int total = 0;
  for (const auto& s : slopes) total += s.multiplicity;
  return total;
}

NewtonPolygon newton_polygon(const IntPoly& f, std::uint64_t p) {
  if (f.is_zero() || f.coeff(0) == 0) throw UsageError("Newton polygon needs a nonzero constant term");
  NewtonPolygon np;
  np.p = p;
  for (int j = 0; j <= f.degree(); ++j) {
    if (f.coeff(j) != 0) np.points.emplace_back(j, valuation(f.coeff(j), p));
  }
  // Monotone chain; collinear interior points are dropped.
  for (const auto& pt : np.points) {
    while (np.hull.size() >= 2) {
      const auto& a = np.hull[np.hull.size() - 2];
      const auto& b = np.hull.back();
      const long long cross = static_cast<long long>(b.first - a.first) * (pt.second - a.second) -
                              static_cast<long long>(b.second - a.second) * (pt.first - a.first);
      if (cross > 0) break;
      np.hull.pop_back();
    }
    np.hull.push_back(pt);
  }
  for (std::size_t k = 1; k < np.hull.size(); ++k) {
    const int dj = np.hull[k].first - np.hull[k - 1].first;
    const int dv = np.hull[k].second - np.hull[k - 1].second;
    np.slopes.push_back({Rational(-dv, dj), dj});
  }
  std::reverse(np.slopes.begin(), np.slopes.end());
  return np;
}

std::optional<int> palindrome_sign(const RatPoly& f) {
  const int d = f.degree();
  bool plus = true;
  bool minus = true;
  for (int j = 0; j <= d; ++j) {
    plus = plus && f.coeff(j) == f.coeff(d - j);
    minus = minus && f.coeff(j) == -f.coeff(d - j);
  }
  if (plus) return 1;
  if (minus) return -1;
  return std::nullopt;
}

}  // namespace wild11
