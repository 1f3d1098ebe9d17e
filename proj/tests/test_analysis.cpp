#include "golden.hpp"
#include "wild11/analysis.hpp"

#include "doctest.h"

using namespace wild11;

namespace {

IntPoly to_poly(const std::vector<BigInt>& c) { return IntPoly(c); }

const CharPolyResult& eps_result(std::uint64_t eps) {
  static std::map<std::uint64_t, CharPolyResult> cache;
  auto it = cache.find(eps);
  if (it == cache.end()) it = cache.emplace(eps, compute_frobenius(make_model(ModelKind::kEpsilon, eps, 11)).charpoly).first;
  return it->second;
}

}  // namespace

TEST_CASE("normalize examples") {
  CHECK(normalize(IntPoly{-11, 1}, 11) == RatPoly{-1, 1});
  CHECK(normalize(to_poly(golden::kMuEps1), 11) == RatPoly(golden::kEpsSquare));
  CHECK(normalize(to_poly(golden::kMuGamma1), 11) == RatPoly(golden::kGammaSquare));
  CHECK_THROWS_AS(normalize(IntPoly{1, 2}, 11), UsageError);
}

TEST_CASE("denormalize inverts normalize") {
  for (const auto& mu : {golden::kMuEps1, golden::kMuGamma1, golden::kMuEps0}) {
    CHECK(denormalize(normalize(to_poly(mu), 11), 11) == to_poly(mu));
  }
}

TEST_CASE("picard bound and height on model polynomials") {
  const std::uint64_t p = 11;
  const IntPoly t2p2 = IntPoly{BigInt(121), 0, 1};
  const IntPoly ss = pow(t2p2, 10);
  CHECK(picard_upper_bound(ss, p) == 22);
  CHECK_FALSE(height_from_newton(ss, p).has_value());

  CHECK(picard_upper_bound(to_poly(golden::kMuEps0), p) == 22);
  CHECK_FALSE(height_from_newton(to_poly(golden::kMuEps0), p).has_value());

  CHECK(picard_upper_bound(to_poly(golden::kMuEps1), p) == 2);
  CHECK(height_from_newton(to_poly(golden::kMuEps1), p) == 10);
  const auto np = newton_polygon(to_poly(golden::kMuEps1), p);
  REQUIRE(np.slopes.size() == 2);
  CHECK(np.slopes[0] == Slope{Rational(9, 10), 10});
  CHECK(np.slopes[1] == Slope{Rational(11, 10), 10});

  // An ordinary factor gives height 1.
  CHECK(height_from_newton(IntPoly{121, -1, 1} * pow(IntPoly{BigInt(121), 0, 1}, 9), p) == 1);
  CHECK(height_to_string(std::nullopt) == "inf");
  CHECK(height_to_string(10) == "10");
}

TEST_CASE("cyclotomic factors of the supersingular row") {
  const auto factors = cyclotomic_factors(normalize(to_poly(golden::kMuEps0), 11));
  int total = 0;
  for (const auto& f : factors) total += f.multiplicity * static_cast<int>(totient(f.k));
  CHECK(total == 20);
  CHECK(cyclotomic_factors(RatPoly(golden::kEpsSquare)).empty());
}

TEST_CASE("unit circle check") {
  CHECK(roots_on_unit_circle(RatPoly(golden::kEpsSquare)));
  CHECK(roots_on_unit_circle(RatPoly(golden::kGammaNonSquare)));
  CHECK_FALSE(roots_on_unit_circle(RatPoly{Rational(1, 4), -1, 1} * RatPoly{4, -1, 1}));
}

TEST_CASE("structural checks pass on every epsilon") {
  for (std::uint64_t eps = 0; eps < 11; ++eps) {
    const auto checks = structural_checks(eps_result(eps), ModelKind::kEpsilon, 11);
    CHECK(checks.all_passed());
    CHECK_FALSE(checks.gamma_parity.has_value());
  }
}

TEST_CASE("structural checks on gamma") {
  const auto result = compute_frobenius(make_model(ModelKind::kGamma, 2, 11)).charpoly;
  const auto checks = structural_checks(result, ModelKind::kGamma, 11);
  CHECK(checks.all_passed());
  CHECK(checks.gamma_parity == true);
  CHECK(checks.gamma_square_identity == true);
}

TEST_CASE("negative control: T^20 + 1 fails the determinant check") {
  CharPolyResult fake = eps_result(1);
  fake.mu = IntPoly::monomial(1, 20) + IntPoly::constant(1);
  fake.determinant = 1;
  const auto checks = structural_checks(fake, ModelKind::kEpsilon, 11);
  CHECK_FALSE(checks.determinant);
  CHECK_FALSE(checks.all_passed());
}

TEST_CASE("analyze ties the pieces together") {
  const auto report = analyze(eps_result(1), ModelKind::kEpsilon);
  CHECK(report.picard_upper == 2);
  CHECK(report.picard_lower == 2);
  CHECK(report.height == 10);
  CHECK(report.palindrome == 1);
  CHECK(report.mu_tilde == RatPoly(golden::kEpsSquare));

  const auto ss = analyze(eps_result(0), ModelKind::kEpsilon);
  CHECK(ss.picard_upper == 22);
  CHECK_FALSE(ss.height.has_value());

  // Non-square class: sign-alternating row.
  CHECK(analyze(eps_result(2), ModelKind::kEpsilon).mu_tilde == RatPoly(golden::kEpsNonSquare));
}
