#include "wild11/delsarte.hpp"
#include "wild11/errors.hpp"
#include "wild11/numeric.hpp"

#include "doctest.h"

using namespace wild11;

TEST_CASE("MultiPoly basics") {
  const auto u = MultiPoly::term(1, {1, 0, 0});
  const auto v = MultiPoly::term(1, {0, 1, 0});
  CHECK((u + v) * (u - v) == u * u - v * v);
  CHECK(pow(u, 3).to_string() == "u^3");
  CHECK((u - u).is_zero());
  CHECK(MultiPoly::term(12, {0, 0, 1}).reduced_mod(11) == MultiPoly::term(1, {0, 0, 1}));
}

TEST_CASE("division leaves no remainder on multiples") {
  const auto rel = fermat_relation();
  const auto g = MultiPoly::term(3, {2, 1, 0}) - MultiPoly::term(1, {0, 0, 4}) + MultiPoly::constant(7);
  const auto d = divide(g * rel, rel);
  CHECK(d.quotient == g);
  CHECK(d.remainder.is_zero());
}

TEST_CASE("Fermat cover identity") {
  const auto check = verify_cover_identity();
  CHECK(check.verified);
  CHECK(check.remainder.is_zero());
  CHECK(check.quotient.to_string() == "u^33 v^22");
  CHECK(check.substituted == check.quotient * fermat_relation());
}

TEST_CASE("cover identity holds modulo every small prime") {
  const auto check = verify_cover_identity();
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    const auto lhs = check.substituted.reduced_mod(p);
    const auto rhs = (check.quotient * fermat_relation()).reduced_mod(p);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("negative control: flipped sign in the map") {
  auto map = fermat_cover_map();
  map.y = -map.y;
  // y enters through y^2 and xy; flipping y breaks the xy term.
  const auto check = verify_cover_identity(map);
  CHECK_FALSE(check.verified);
  CHECK_FALSE(check.remainder.is_zero());

  auto map2 = fermat_cover_map();
  map2.t = -map2.t;
  CHECK_FALSE(verify_cover_identity(map2).verified);
}

TEST_CASE("supersingular_possible") {
  CHECK(supersingular_possible(11));
  const std::vector<std::uint64_t> yes{2, 7, 13, 17, 19, 29, 41, 43};
  const std::vector<std::uint64_t> no{3, 5, 23, 31, 37, 47, 53, 59};
  for (auto p : yes) CHECK(supersingular_possible(p));
  for (auto p : no) CHECK_FALSE(supersingular_possible(p));
  for (std::uint64_t p = 2; p < 1000; ++p) {
    if (!is_prime(p) || p == 11) continue;
    CHECK(supersingular_possible(p) == is_nonsquare_mod_11(p));
  }
  CHECK_THROWS_AS(supersingular_possible(12), UsageError);
  CHECK_THROWS_AS(supersingular_possible(1), UsageError);
}
