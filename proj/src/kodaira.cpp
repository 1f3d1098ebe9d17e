#include "wild11/kodaira.hpp"

#include "wild11/errors.hpp"

namespace wild11 {

int KodairaType::components() const {
  switch (family) {
    case Family::kIn: return n;
    case Family::kII: return 1;
    case Family::kIII: return 2;
    case Family::kIV: return 3;
    case Family::kInStar: return n + 5;
    case Family::kIVStar: return 7;
    case Family::kIIIStar: return 8;
    case Family::kIIStar: return 9;
  }
  return 0;
}

std::uint64_t KodairaType::lattice_discriminant() const {
  switch (family) {
    case Family::kIn: return static_cast<std::uint64_t>(n);
    case Family::kII: return 1;
    case Family::kIII: return 2;
    case Family::kIV: return 3;
    case Family::kInStar: return 4;
    case Family::kIVStar: return 3;
    case Family::kIIIStar: return 2;
    case Family::kIIStar: return 1;
  }
  return 1;
}

std::string KodairaType::lattice_label() const {
  switch (family) {
    case Family::kIn: return n > 1 ? "A_" + std::to_string(n - 1) : "";
    case Family::kII: return "";
    case Family::kIII: return "A_1";
    case Family::kIV: return "A_2";
    case Family::kInStar: return "D_" + std::to_string(n + 4);
    case Family::kIVStar: return "E_6";
    case Family::kIIIStar: return "E_7";
    case Family::kIIStar: return "E_8";
  }
  return "";
}

std::string KodairaType::name() const {
  switch (family) {
    case Family::kIn: return "I_" + std::to_string(n);
    case Family::kII: return "II";
    case Family::kIII: return "III";
    case Family::kIV: return "IV";
    case Family::kInStar: return "I_" + std::to_string(n) + "^*";
    case Family::kIVStar: return "IV^*";
    case Family::kIIIStar: return "III^*";
    case Family::kIIStar: return "II^*";
  }
  return "?";
}

KodairaType kodaira_type(int vc4, int vdelta) {
  using F = KodairaType::Family;
  if (vdelta < 1) throw UsageError("smooth fibre has no Kodaira type");
  if (vc4 == 0) return {F::kIn, vdelta};
  if (vc4 == 2 && vdelta > 6) return {F::kInStar, vdelta - 6};
  switch (vdelta) {
    case 2: return {F::kII, 0};
    case 3:
      if (vc4 == 1) return {F::kIII, 0};
      break;
    case 4:
      if (vc4 >= 2) return {F::kIV, 0};
      break;
    case 6:
      if (vc4 >= 2) return {F::kInStar, 0};
      break;
    case 8:
      if (vc4 >= 3) return {F::kIVStar, 0};
      break;
    case 9:
      if (vc4 == 3) return {F::kIIIStar, 0};
      break;
    case 10:
      if (vc4 >= 4) return {F::kIIStar, 0};
      break;
    default:
      break;
  }
  throw InconsistencyError("valuations (v(c4), v(Delta)) = (" + std::to_string(vc4) + ", " + std::to_string(vdelta) +
                           ") match no Kodaira type on a minimal model");
}

std::vector<KodairaFiber> classify_fibers(const WeierstrassModel& model) {
  if (model.p == 2 || model.p == 3) {
    throw CapabilityError("characteristic " + std::to_string(model.p) +
                          ": Kodaira types by valuation need p >= 5 (the uniform model has a discriminant report)");
  }
  std::vector<KodairaFiber> fibers;
  for (auto& place : singular_places(model)) {
    const KodairaType type = kodaira_type(place.vc4, place.vdelta);
    fibers.push_back({std::move(place), type});
  }
  return fibers;
}

int count_fibers(const std::vector<KodairaFiber>& fibers, const KodairaType& type) {
  int count = 0;
  for (const auto& f : fibers)
    if (f.type == type) count += f.place.degree;
  return count;
}

WildDeltaReport wild_delta_report(const WeierstrassModel& model) {
  if (model.kind != ModelKind::kUniform) throw CapabilityError("the wild discriminant report covers the uniform model only");
  if (model.p != 2 && model.p != 3) throw CapabilityError("characteristic " + std::to_string(model.p) + " is tame; classify instead");
  WildDeltaReport report;
  report.delta = c4_delta(model).delta;
  if (report.delta.is_zero()) throw InconsistencyError("uniform discriminant vanishes identically");
  const FpPoly t = FpPoly::t(model.p);
  report.v_zero = valuation(report.delta, t);
  report.v_infinity = valuation(c4_delta_at_infinity(model).delta, t);
  report.tame_at_infinity = 2;  // type II
  report.wild_at_infinity = report.v_infinity - report.tame_at_infinity;
  return report;
}

LatticeSummary trivial_lattice(const std::vector<KodairaFiber>& fibers) {
  LatticeSummary ls;
  for (const auto& f : fibers) {
    ls.rank += f.place.degree * (f.components() - 1);
    for (int k = 0; k < f.place.degree; ++k) {
      ls.abs_disc *= f.type.lattice_discriminant();
      const std::string label = f.type.lattice_label();
      if (!label.empty()) ls.components.push_back(label);
    }
  }
  if (ls.rank > 22) throw InconsistencyError("trivial lattice rank " + std::to_string(ls.rank) + " exceeds b_2 = 22");
  return ls;
}

std::optional<int> artin_invariant(const LatticeSummary& lattice, std::uint64_t p) {
  if (lattice.rank != 22 || p < 2) return std::nullopt;
  std::uint64_t d = lattice.abs_disc;
  int e = 0;
  while (d % p == 0) {
    d /= p;
    ++e;
  }
  if (d != 1 || e == 0 || e % 2 != 0) return std::nullopt;
  return e / 2;
}

}  // namespace wild11
