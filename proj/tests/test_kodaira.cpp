#include "wild11/errors.hpp"
#include "wild11/kodaira.hpp"

#include "doctest.h"

using namespace wild11;

namespace {

using F = KodairaType::Family;

const KodairaType kI1{F::kIn, 1};
const KodairaType kI11{F::kIn, 11};
const KodairaType kII{F::kII, 0};

int euler_sum(const std::vector<KodairaFiber>& fibers) {
  int total = 0;
  for (const auto& f : fibers) total += f.place.vdelta * f.place.degree;
  return total;
}

}  // namespace

TEST_CASE("kodaira_type lookup") {
  CHECK_THROWS_AS(kodaira_type(0, 0), UsageError);
  CHECK(kodaira_type(0, 11) == kI11);
  CHECK(kodaira_type(1, 2) == kII);
  CHECK(kodaira_type(1, 3) == KodairaType{F::kIII, 0});
  CHECK(kodaira_type(2, 4) == KodairaType{F::kIV, 0});
  CHECK(kodaira_type(2, 6) == KodairaType{F::kInStar, 0});
  CHECK(kodaira_type(2, 9) == KodairaType{F::kInStar, 3});
  CHECK(kodaira_type(3, 8) == KodairaType{F::kIVStar, 0});
  CHECK(kodaira_type(3, 9) == KodairaType{F::kIIIStar, 0});
  CHECK(kodaira_type(4, 10) == KodairaType{F::kIIStar, 0});
  CHECK_THROWS_AS(kodaira_type(4, 12), InconsistencyError);
}

TEST_CASE("fibre type data") {
  CHECK(kI11.components() == 11);
  CHECK(kI11.lattice_label() == "A_10");
  CHECK(kI11.lattice_discriminant() == 11);
  CHECK(kI11.name() == "I_11");
  CHECK(kII.components() == 1);
  CHECK(kII.lattice_label().empty());
  CHECK(KodairaType{F::kInStar, 0}.name() == "I_0^*");
  CHECK(KodairaType{F::kInStar, 1}.lattice_discriminant() == 4);
  CHECK(KodairaType{F::kIIStar, 0}.lattice_label() == "E_8");
  CHECK(KodairaType{F::kIIStar, 0}.lattice_discriminant() == 1);
}

TEST_CASE("uniform model in characteristic 7") {
  const auto fibers = classify_fibers(make_model(ModelKind::kUniform, 0, 7));
  CHECK(count_fibers(fibers, kII) == 1);
  CHECK(count_fibers(fibers, kI11) == 1);
  CHECK(count_fibers(fibers, kI1) == 11);
  int rational_i1 = 0, closed_i1 = 0;
  for (const auto& f : fibers) {
    if (f.type != kI1) continue;
    (f.place.degree == 1 ? rational_i1 : closed_i1) += 1;
    if (f.place.degree > 1) CHECK(f.place.degree == 10);
  }
  CHECK(rational_i1 == 1);
  CHECK(closed_i1 == 1);
  for (const auto& f : fibers)
    if (f.type == kII) CHECK(f.place.where == FiberPlace::Where::kInfinity);
}

TEST_CASE("uniform model in characteristic 11") {
  const auto fibers = classify_fibers(make_model(ModelKind::kUniform, 0, 11));
  REQUIRE(fibers.size() == 3);
  CHECK(count_fibers(fibers, kII) == 1);
  CHECK(count_fibers(fibers, kI11) == 2);
  std::vector<std::uint64_t> where;
  for (const auto& f : fibers)
    if (f.type == kI11) where.push_back(f.place.t0);
  CHECK(where == std::vector<std::uint64_t>{0, 7});

  const auto lattice = trivial_lattice(fibers);
  CHECK(lattice.rank == 22);
  CHECK(lattice.abs_disc == 121);
  CHECK(artin_invariant(lattice, 11) == 1);
}

TEST_CASE("epsilon model fibres") {
  const auto fibers = classify_fibers(make_model(ModelKind::kEpsilon, 1, 11));
  CHECK(count_fibers(fibers, kII) == 1);
  CHECK(count_fibers(fibers, kI1) == 22);
  const auto lattice = trivial_lattice(fibers);
  CHECK(lattice.rank == 2);
  CHECK(lattice.abs_disc == 1);
  CHECK_FALSE(artin_invariant(lattice, 11).has_value());
}

TEST_CASE("Euler numbers add up to 24") {
  for (std::uint64_t p : {5, 7, 11, 13}) CHECK(euler_sum(classify_fibers(make_model(ModelKind::kUniform, 0, p))) == 24);
  for (std::uint64_t a = 0; a < 11; ++a) {
    CHECK(euler_sum(classify_fibers(make_model(ModelKind::kEpsilon, a, 11))) == 24);
    CHECK(euler_sum(classify_fibers(make_model(ModelKind::kGamma, a, 11))) == 24);
  }
}

TEST_CASE("wild characteristics") {
  for (std::uint64_t p : {2, 3}) {
    const auto model = make_model(ModelKind::kUniform, 0, p);
    CHECK_THROWS_AS(classify_fibers(model), CapabilityError);
    const auto w = wild_delta_report(model);
    CHECK(w.delta.degree() == 11);
    CHECK(w.v_zero == 11);
    CHECK(w.v_infinity == 13);
    CHECK(w.tame_at_infinity == 2);
    CHECK(w.wild_at_infinity == 11);
  }
  CHECK_THROWS(wild_delta_report(make_model(ModelKind::kUniform, 0, 5)));
}

TEST_CASE("lattice bookkeeping") {
  std::vector<KodairaFiber> fibers(2);
  fibers[0].type = KodairaType{F::kIIStar, 0};
  fibers[1].type = KodairaType{F::kInStar, 2};
  const auto lattice = trivial_lattice(fibers);
  CHECK(lattice.rank == 2 + 8 + 6);
  CHECK(lattice.abs_disc == 4);
  CHECK(lattice.components == std::vector<std::string>{"E_8", "D_6"});
}
