#include "wild11/delsarte.hpp"

#include "wild11/errors.hpp"

#include <sstream>

namespace wild11 {

MultiPoly MultiPoly::term(const BigInt& c, Exponent e) {
  MultiPoly m;
  m.add_term(e, c);
  return m;
}

void MultiPoly::add_term(const Exponent& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::pair<Exponent, BigInt> MultiPoly::leading() const {
  if (terms_.empty()) throw UsageError("zero polynomial has no leading term");
  return *terms_.rbegin();
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  }
  return out;
}

MultiPoly MultiPoly::reduced_mod(std::uint64_t p) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    BigInt r = c % p;
    if (r < 0) r += p;
    out.add_term(e, r);
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  static constexpr const char* kVars[3] = {"u", "v", "w"};
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    const bool bare = e == Exponent{0, 0, 0};
    bool wrote = false;
    if (mag != 1 || bare) {
      os << mag;
      wrote = true;
    }
    for (int k = 0; k < 3; ++k) {
      if (e[k] == 0) continue;
      if (wrote) os << " ";
      os << kVars[k];
      if (e[k] > 1) os << "^" << e[k];
      wrote = true;
    }
  }
  return os.str();
}

MultiPoly pow(const MultiPoly& base, unsigned exp) {
  MultiPoly result = MultiPoly::constant(1);
  for (unsigned k = 0; k < exp; ++k) result = result * base;
  return result;
}

MultiDivision divide(const MultiPoly& num, const MultiPoly& den) {
  const auto [lead_e, lead_c] = den.leading();
  if (lead_c != 1 && lead_c != -1) throw UsageError("divisor must have a unit leading coefficient");
  MultiDivision out;
  MultiPoly rest = num;
  while (!rest.is_zero()) {
    const auto [e, c] = rest.leading();
    if (e[0] >= lead_e[0] && e[1] >= lead_e[1] && e[2] >= lead_e[2]) {
      const MultiPoly t = MultiPoly::term(c * lead_c, {e[0] - lead_e[0], e[1] - lead_e[1], e[2] - lead_e[2]});
      out.quotient += t;
      rest -= t * den;
    } else {
      const MultiPoly t = MultiPoly::term(c, e);
      out.remainder += t;
      rest -= t;
    }
  }
  return out;
}

CoverMap fermat_cover_map() {
  return {MultiPoly::term(-1, {11, 11, 0}), MultiPoly::term(-1, {22, 11, 0}), MultiPoly::term(-1, {3, 2, 1})};
}

MultiPoly fermat_relation() {
  return MultiPoly::term(1, {11, 0, 0}) + MultiPoly::term(1, {0, 11, 0}) + MultiPoly::term(1, {0, 0, 11}) +
         MultiPoly::constant(1);
}

MultiPoly substitute_uniform(const CoverMap& map) {
  return map.y * map.y + map.x * map.y - pow(map.x, 3) - pow(map.t, 11);
}

CoverCheck verify_cover_identity(const CoverMap& map) {
  CoverCheck check;
  check.substituted = substitute_uniform(map);
  auto [quotient, remainder] = divide(check.substituted, fermat_relation());
  check.quotient = std::move(quotient);
  check.remainder = std::move(remainder);
  check.verified = check.remainder.is_zero();
  return check;
}

bool is_nonsquare_mod_11(std::uint64_t p) {
  const std::uint64_t r = p % 11;
  if (r == 0) return false;
  for (std::uint64_t x = 1; x < 11; ++x)
    if (x * x % 11 == r) return false;
  return true;
}

bool supersingular_possible(std::uint64_t p) {
  if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
  if (p == 11) return true;
  int order = 1;
  for (std::uint64_t power = p % 11; power != 1; power = power * (p % 11) % 11) ++order;
  const bool even_order = order % 2 == 0;
  if (even_order != is_nonsquare_mod_11(p)) {
    throw InconsistencyError("order criterion and non-square criterion disagree at p = " + std::to_string(p));
  }
  return even_order;
}

}  // namespace wild11
