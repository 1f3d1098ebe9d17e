#include "wild11/equivariant.hpp"

#include "wild11/errors.hpp"
#include "wild11/parallel.hpp"

#include <future>

namespace wild11 {

BigInt FixTally::total() const {
  BigInt s = 0;
  for (auto v : fix) s += v;
  return s;
}

FixTally fixed_locus_tally(const WeierstrassModel& model, const FieldSpec& spec, BucketSign sign) {
  if (model.kind == ModelKind::kUniform) {
    throw CapabilityError("the uniform model carries no t -> t + 1 automorphism; tally unsupported");
  }
  if (model.p != kWildCharacteristic || spec.p() != kWildCharacteristic) {
    throw CapabilityError("the equivariant tally is implemented for characteristic 11 only");
  }
  if (spec.r() > 2) throw CapabilityError("the equivariant tally needs only F_p and F_{p^2}; r > 2 unsupported");

  const std::uint64_t p = spec.p();
  const std::uint64_t q = spec.q();
  const FieldElement param = spec.from_base(model.param);
  const auto traces = trace_table(spec);

  // Per-element squares and x^3 + eps x^2 (resp. x^3 + gamma x).
  std::vector<FieldElement> squares(q);
  std::vector<FieldElement> cubic(q);
  for (std::uint64_t i = 0; i < q; ++i) {
    const FieldElement x = spec.at(i);
    const FieldElement x2 = spec.mul(x, x);
    squares[i] = x2;
    const FieldElement lower = model.kind == ModelKind::kEpsilon ? spec.mul(param, x2) : spec.mul(param, x);
    cubic[i] = spec.add(spec.mul(x2, x), lower);
  }

  using Buckets = std::array<std::uint64_t, kCycOrder>;
  const Buckets affine = parallel_reduce<Buckets>(
      q, Buckets{},
      [&](std::uint64_t begin, std::uint64_t end) {
        Buckets local{};
        for (std::uint64_t xi = begin; xi < end; ++xi) {
          for (std::uint64_t yi = 0; yi < q; ++yi) {
            const FieldElement c = spec.sub(squares[yi], cubic[xi]);  // c = t^p - t
            const std::uint64_t tr = traces[spec.index(c)];
            const std::uint64_t n = sign == BucketSign::kNegatedTrace ? (p - tr) % p : tr;
            local[n] += p;
          }
        }
        return local;
      },
      [](Buckets acc, const Buckets& part) {
        for (int n = 0; n < kCycOrder; ++n) acc[n] += part[n];
        return acc;
      });

  FixTally tally;
  tally.q = q;
  for (int n = 0; n < kCycOrder; ++n) tally.fix[n] = 2 * q + 1 + affine[n];
  return tally;
}

std::array<BigInt, kCycOrder> traces_from_tally(const FixTally& tally) {
  std::array<BigInt, kCycOrder> tr;
  const BigInt q2 = BigInt(tally.q) * tally.q;
  for (int n = 0; n < kCycOrder; ++n) tr[n] = BigInt(tally.fix[n]) - 1 - q2;
  return tr;
}

CharPolyResult assemble_charpoly(const EigenTraces& at_p, const EigenTraces& at_p2, std::uint64_t p) {
  if (at_p.q != p || at_p2.q != p * p) throw UsageError("eigentraces must be taken over F_p and F_{p^2}");
  CharPolyResult result;
  result.p = p;
  CycPoly product = CycPoly::constant(CycNum(1));
  CycNum det(1);
  for (int i = 1; i <= kCycDegree; ++i) {
    const CycNum& a = at_p.at(i);
    const CycNum& a2 = at_p2.at(i);
    const CycNum b = (a * a - a2) / Rational(2);
    if (!b.is_integral()) {
      throw InconsistencyError("b_" + std::to_string(i) + " = (a_i(p)^2 - a_i(p^2))/2 is not in Z[zeta]");
    }
    result.per_eigenspace[i - 1] = {a, a2, b};
    product *= CycPoly{b, -a, CycNum(1)};
    det *= b;
  }
  std::vector<BigInt> coeffs;
  for (int j = 0; j <= product.degree(); ++j) {
    const auto r = as_rational(product.coeff(j));
    if (!r || !is_integer(*r)) {
      throw InconsistencyError("coefficient of T^" + std::to_string(j) + " of mu_p is not a rational integer");
    }
    coeffs.push_back(boost::multiprecision::numerator(*r));
  }
  const auto d = as_rational(det);
  if (!d || !is_integer(*d)) throw InconsistencyError("determinant of Frobenius on V is not a rational integer");
  result.determinant = boost::multiprecision::numerator(*d);
  result.mu = IntPoly(std::move(coeffs));
  const IntPoly linear{-BigInt(p), BigInt(1)};
  result.mu_full = linear * linear * result.mu;
  return result;
}

IntPoly charpoly_over_p2(const CharPolyResult& result) {
  CycPoly product = CycPoly::constant(CycNum(1));
  for (const auto& f : result.per_eigenspace) product *= CycPoly{f.b * f.b, -f.a_p2, CycNum(1)};
  std::vector<BigInt> coeffs;
  for (const auto& c : product.coeffs()) {
    const auto r = as_rational(c);
    if (!r || !is_integer(*r)) throw InconsistencyError("mu_{p^2} has a non-integral coefficient");
    coeffs.push_back(boost::multiprecision::numerator(*r));
  }
  return IntPoly(std::move(coeffs));
}

FrobeniusData compute_frobenius(const WeierstrassModel& model, BucketSign sign) {
  const FieldSpec fp = FieldSpec::prime(model.p);
  const FieldSpec fp2 = FieldSpec::extension(model.p, 2);
  FrobeniusData data;
  if (worker_count() > 1) {
    auto big = std::async(std::launch::async, [&] { return fixed_locus_tally(model, fp2, sign); });
    data.tally_p = fixed_locus_tally(model, fp, sign);
    data.tally_p2 = big.get();
  } else {
    data.tally_p = fixed_locus_tally(model, fp, sign);
    data.tally_p2 = fixed_locus_tally(model, fp2, sign);
  }
  data.traces_p = traces_from_tally(data.tally_p);
  data.traces_p2 = traces_from_tally(data.tally_p2);
  data.eigen_p = inverse_dft(data.traces_p, fp.q());
  data.eigen_p2 = inverse_dft(data.traces_p2, fp2.q());
  data.charpoly = assemble_charpoly(data.eigen_p, data.eigen_p2, model.p);
  return data;
}

}  // namespace wild11
