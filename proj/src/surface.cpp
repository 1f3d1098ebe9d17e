#include "wild11/surface.hpp"

#include "wild11/errors.hpp"
#include "wild11/numeric.hpp"
#include "wild11/parallel.hpp"

#include <array>
#include <sstream>

namespace wild11 {
namespace {

WeierstrassCoefficients chart_at_infinity(const WeierstrassCoefficients& w) {
  return {w.a1.reversed(2), w.a2.reversed(4), w.a3.reversed(6), w.a4.reversed(8), w.a6.reversed(12)};
}

void check_k3_degrees(const WeierstrassCoefficients& w) {
  const std::array<std::pair<const FpPoly*, int>, 5> bounds{
      {{&w.a1, 2}, {&w.a2, 4}, {&w.a3, 6}, {&w.a4, 8}, {&w.a6, 12}}};
  for (const auto& [poly, bound] : bounds) {
    if (poly->degree() > bound) throw InconsistencyError("Weierstrass coefficient exceeds the K3 degree bound");
  }
}

int place_valuation(const FpPoly& g, const FpPoly& pi) {
  return g.is_zero() ? kInfiniteValuation : valuation(g, pi);
}

// Coefficients of one fibre, already in F_q.
struct Cubic {
  FieldElement a1, a2, a3, a4, a6;
};

Cubic evaluate(const WeierstrassCoefficients& w, const FieldElement& t, const FieldSpec& spec) {
  return {w.a1(t, spec), w.a2(t, spec), w.a3(t, spec), w.a4(t, spec), w.a6(t, spec)};
}

// 1 + sum_x (1 + chi(x^3 + a2 x^2 + a4 x + a6 + (a1 x + a3)^2 / 4)).
std::uint64_t count_cubic(const Cubic& c, const FieldSpec& spec, const std::vector<std::int8_t>& chi) {
  const FieldElement quarter = spec.inverse(spec.from_base(4));
  std::int64_t total = 1;
  for (std::uint64_t i = 0; i < spec.q(); ++i) {
    const FieldElement x = spec.at(i);
    FieldElement rhs = spec.add(spec.mul(spec.add(spec.mul(spec.add(x, c.a2), x), c.a4), x), c.a6);
    const FieldElement lin = spec.add(spec.mul(c.a1, x), c.a3);
    rhs = spec.add(rhs, spec.mul(spec.mul(lin, lin), quarter));
    total += 1 + chi[spec.index(rhs)];
  }
  return static_cast<std::uint64_t>(total);
}

void require_odd(const FieldSpec& spec) {
  if (spec.p() == 2) throw CapabilityError("point counting in characteristic 2 is unsupported");
}

}  // namespace

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::kEpsilon: return "epsilon";
    case ModelKind::kGamma: return "gamma";
    case ModelKind::kUniform: return "uniform";
  }
  return "?";
}

ModelKind parse_model_kind(const std::string& name) {
  if (name == "epsilon") return ModelKind::kEpsilon;
  if (name == "gamma") return ModelKind::kGamma;
  if (name == "uniform") return ModelKind::kUniform;
  throw UsageError("unknown model kind '" + name + "' (expected epsilon, gamma or uniform)");
}

WeierstrassModel make_model(ModelKind kind, std::uint64_t param, std::uint64_t p) {
  if (!is_prime(p)) throw UsageError("characteristic " + std::to_string(p) + " is not prime");
  if (kind != ModelKind::kUniform && param >= p) throw UsageError("parameter must lie in [0, p)");
  WeierstrassModel m;
  m.p = p;
  m.kind = kind;
  m.param = kind == ModelKind::kUniform ? 0 : param;
  const FpPoly zero(p, {});
  m.finite = {zero, zero, zero, zero, zero};
  const FpPoly t11 = FpPoly::monomial(p, 1, 11);
  const auto prm = static_cast<std::int64_t>(m.param);
  switch (kind) {
    case ModelKind::kEpsilon:
      m.finite.a2 = FpPoly::constant(p, prm);
      m.finite.a6 = t11 - FpPoly::t(p);
      break;
    case ModelKind::kGamma:
      m.finite.a4 = FpPoly::constant(p, prm);
      m.finite.a6 = t11 - FpPoly::t(p);
      break;
    case ModelKind::kUniform:
      m.finite.a1 = FpPoly::constant(p, 1);
      m.finite.a6 = t11;
      break;
  }
  check_k3_degrees(m.finite);
  m.infinity = chart_at_infinity(m.finite);
  return m;
}

Invariants c4_delta(const WeierstrassCoefficients& w) {
  const FpPoly b2 = w.a1 * w.a1 + 4 * w.a2;
  const FpPoly b4 = w.a1 * w.a3 + 2 * w.a4;
  const FpPoly b6 = w.a3 * w.a3 + 4 * w.a6;
  const FpPoly b8 = w.a1 * w.a1 * w.a6 + 4 * (w.a2 * w.a6) - w.a1 * w.a3 * w.a4 + w.a2 * w.a3 * w.a3 - w.a4 * w.a4;
  Invariants inv;
  inv.c4 = b2 * b2 - 24 * b4;
  inv.delta = -1 * (b2 * b2 * b8) - 8 * (b4 * b4 * b4) - 27 * (b6 * b6) + 9 * (b2 * b4 * b6);
  return inv;
}

Invariants c4_delta(const WeierstrassModel& model) { return c4_delta(model.finite); }
Invariants c4_delta_at_infinity(const WeierstrassModel& model) { return c4_delta(model.infinity); }

std::string FiberPlace::label() const {
  switch (where) {
    case Where::kInfinity: return "t=inf";
    case Where::kRational: return "t=" + std::to_string(t0);
    case Where::kClosedPoint: return "(" + factor.to_string() + ")";
  }
  return "?";
}

std::vector<FiberPlace> singular_places(const WeierstrassModel& model) {
  if (model.p == 2) throw CapabilityError("fibre analysis in characteristic 2 is unsupported");
  const Invariants inv = c4_delta(model);
  if (inv.delta.is_zero()) throw UsageError("discriminant vanishes identically: not an elliptic surface");
  std::vector<FiberPlace> places;
  for (const auto& [pi, mult] : factor(inv.delta)) {
    FiberPlace place;
    place.factor = pi;
    place.degree = pi.degree();
    place.vdelta = mult;
    place.vc4 = place_valuation(inv.c4, pi);
    if (pi.degree() == 1) {
      place.where = FiberPlace::Where::kRational;
      place.t0 = (model.p - pi.coeff(0)) % model.p;
    } else {
      place.where = FiberPlace::Where::kClosedPoint;
    }
    places.push_back(std::move(place));
  }
  const Invariants at_inf = c4_delta_at_infinity(model);
  const FpPoly s = FpPoly::t(model.p);
  const int vinf = place_valuation(at_inf.delta, s);
  if (vinf > 0) {
    FiberPlace place;
    place.where = FiberPlace::Where::kInfinity;
    place.factor = s;
    place.vdelta = vinf;
    place.vc4 = place_valuation(at_inf.c4, s);
    places.push_back(std::move(place));
  }
  return places;
}

std::uint64_t fiber_count(const WeierstrassModel& model, const std::optional<FieldElement>& t0, const FieldSpec& spec) {
  require_odd(spec);
  if (spec.p() != model.p) throw UsageError("field characteristic differs from the model");
  return fiber_count(model, t0, spec, quadratic_character_table(spec));
}

std::uint64_t fiber_count(const WeierstrassModel& model, const std::optional<FieldElement>& t0, const FieldSpec& spec,
                          const std::vector<std::int8_t>& chi) {
  require_odd(spec);
  if (spec.p() != model.p) throw UsageError("field characteristic differs from the model");
  if (chi.size() != spec.q()) throw UsageError("character table does not match the field");
  const Cubic c = t0 ? evaluate(model.finite, *t0, spec) : evaluate(model.infinity, spec.zero(), spec);
  return count_cubic(c, spec, chi);
}

std::uint64_t surface_count(const WeierstrassModel& model, const FieldSpec& spec) {
  require_odd(spec);
  if (spec.p() != model.p) throw UsageError("field characteristic differs from the model");
  for (const auto& place : singular_places(model)) {
    const bool i1 = place.vdelta == 1 && place.vc4 == 0;
    const bool ii = place.vdelta == 2 && place.vc4 >= 1;
    if (!i1 && !ii) {
      throw CapabilityError("fibre at " + place.label() + " is reducible; naive Weierstrass counting would undercount");
    }
  }
  const auto chi = quadratic_character_table(spec);
  const std::uint64_t affine = parallel_reduce<std::uint64_t>(
      spec.q(), 0,
      [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t sum = 0;
        for (std::uint64_t i = begin; i < end; ++i) sum += count_cubic(evaluate(model.finite, spec.at(i), spec), spec, chi);
        return sum;
      },
      [](std::uint64_t a, std::uint64_t b) { return a + b; });
  return affine + count_cubic(evaluate(model.infinity, spec.zero(), spec), spec, chi);
}

}  // namespace wild11
