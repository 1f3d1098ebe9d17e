#include "wild11/errors.hpp"
#include "wild11/fp_poly.hpp"

#include "doctest.h"

using namespace wild11;

namespace {

FpPoly expand(const std::vector<FpFactor>& factors, std::uint64_t p) {
  FpPoly out = FpPoly::constant(p, 1);
  for (const auto& f : factors) out = out * pow(f.factor, static_cast<unsigned>(f.multiplicity));
  return out;
}

}  // namespace

TEST_CASE("arithmetic and division") {
  const FpPoly a(7, {1, 2, 3});
  const FpPoly b(7, {5, 1});
  const auto [q, r] = divmod(a * b + FpPoly(7, {4}), b);
  CHECK(q == a);
  CHECK(r == FpPoly(7, {4}));
  CHECK(gcd(a * b, b * b) == b.monic());
  CHECK(FpPoly(7, {-1, 7, 14}) == FpPoly(7, {6}));
}

TEST_CASE("reversed chart") {
  const FpPoly f(11, {0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1});  // t^11 - t
  const FpPoly g = f.reversed(12);
  CHECK(g == FpPoly(11, {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1}));  // s - s^11
}

TEST_CASE("Artin-Schreier polynomials are irreducible") {
  // t^11 - t - c over F_11 is irreducible for c != 0.
  for (std::int64_t c = 1; c < 11; ++c) {
    std::vector<std::int64_t> coeffs(12, 0);
    coeffs[0] = -c;
    coeffs[1] = -1;
    coeffs[11] = 1;
    const auto factors = factor(FpPoly(11, coeffs));
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].factor.degree() == 11);
    CHECK(factors[0].multiplicity == 1);
  }
}

TEST_CASE("factor handles p-th powers") {
  const FpPoly lin(11, {4, 1});
  const auto f = pow(lin, 11) * FpPoly::t(11);
  const auto factors = factor(f);
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].factor == FpPoly::t(11));
  CHECK(factors[1].factor == lin);
  CHECK(factors[1].multiplicity == 11);
}

TEST_CASE("factorization reproduces the input") {
  const std::vector<FpPoly> samples{
      FpPoly(7, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 5}),                 // 5 t^11 + 1
      FpPoly(13, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 432 % 13}),          // 432 t^11 + 1
      pow(FpPoly(5, {1, 1, 1}), 3) * pow(FpPoly(5, {2, 1}), 5),          // mixed multiplicities
      pow(FpPoly(3, {1, 0, 1}), 6) * FpPoly(3, {1, 2, 0, 1}),
  };
  for (const auto& f : samples) {
    const auto factors = factor(f);
    CHECK(expand(factors, f.p()) == f.monic());
    for (const auto& fac : factors) {
      CHECK(fac.factor.leading() == 1);
      // Irreducible: no root when degree > 1 and no repeated factor in output.
      if (fac.factor.degree() > 1) CHECK(roots(fac.factor).empty());
    }
  }
}

TEST_CASE("432 t^11 + 1 over F_7 splits as degree 1 + degree 10") {
  const auto factors = factor(FpPoly(7, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 432}));
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].factor.degree() == 1);
  CHECK(factors[1].factor.degree() == 10);
}

TEST_CASE("valuation") {
  const FpPoly t = FpPoly::t(11);
  CHECK(valuation(pow(t, 5) * FpPoly(11, {1, 1}), t) == 5);
  CHECK_THROWS_AS(valuation(FpPoly(11, {}), t), UsageError);
}
