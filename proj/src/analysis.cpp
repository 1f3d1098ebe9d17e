#include "wild11/analysis.hpp"

#include "wild11/errors.hpp"
#include "wild11/numeric.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace wild11 {
namespace {

constexpr int kMaxCyclotomicIndex = 100;

void require_monic(const IntPoly& mu) {
  if (mu.is_zero() || mu.leading() != 1) throw UsageError("characteristic polynomial must be monic");
}

}  // namespace

RatPoly normalize(const IntPoly& mu, std::uint64_t p) {
  require_monic(mu);
  const int d = mu.degree();
  const Rational pd(ipow(BigInt(p), static_cast<unsigned>(d)));
  std::vector<Rational> c;
  for (int j = 0; j <= d; ++j) c.push_back(Rational(mu.coeff(j) * ipow(BigInt(p), static_cast<unsigned>(j))) / pd);
  return RatPoly(std::move(c));
}

IntPoly denormalize(const RatPoly& mu_tilde, std::uint64_t p) {
  if (mu_tilde.is_zero() || mu_tilde.leading() != 1) throw UsageError("normalized polynomial must be monic");
  const int d = mu_tilde.degree();
  std::vector<Rational> c;
  for (int j = 0; j <= d; ++j)
    c.push_back(mu_tilde.coeff(j) * Rational(ipow(BigInt(p), static_cast<unsigned>(d - j))));
  return to_integer(RatPoly(std::move(c)));
}

std::vector<CyclotomicFactor> cyclotomic_factors(const RatPoly& mu_tilde) {
  std::vector<CyclotomicFactor> out;
  for (int k = 1; k <= kMaxCyclotomicIndex; ++k) {
    if (static_cast<int>(totient(k)) > mu_tilde.degree()) continue;
    const int m = divides_with_multiplicity(to_rational(cyclotomic_poly(k)), mu_tilde);
    if (m > 0) out.push_back({k, m});
  }
  return out;
}

int picard_upper_bound(const IntPoly& mu, std::uint64_t p) {
  int bound = 2;
  for (const auto& f : cyclotomic_factors(normalize(mu, p))) bound += f.multiplicity * static_cast<int>(totient(f.k));
  return bound;
}

std::optional<int> height_from_newton(const IntPoly& mu, std::uint64_t p) {
  const NewtonPolygon np = newton_polygon(mu, p);
  const Rational s = np.min_valuation();
  if (s == 1) return std::nullopt;
  if (s > 1) throw InconsistencyError("least root valuation exceeds 1");
  const Rational h = Rational(1) / (Rational(1) - s);
  if (!is_integer(h) || h < 1 || h > 10) {
    throw InconsistencyError("Newton polygon gives height " + to_string(h) + ", outside {1..10, inf}");
  }
  return static_cast<int>(boost::multiprecision::numerator(h));
}

bool roots_on_unit_circle(const RatPoly& mu_tilde, double tolerance) {
  RatPoly rest = mu_tilde;
  for (const auto& f : cyclotomic_factors(mu_tilde)) {
    const RatPoly phi = to_rational(cyclotomic_poly(f.k));
    for (int m = 0; m < f.multiplicity; ++m) rest = divmod(rest, phi).first;
  }
  const int d = rest.degree();
  if (d < 1) return true;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  const double lead = static_cast<double>(rest.leading());
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -static_cast<double>(rest.coeff(i)) / lead;
  const Eigen::VectorXcd roots = Eigen::EigenSolver<Eigen::MatrixXd>(companion, false).eigenvalues();
  return ((roots.array().abs() - 1.0).abs() <= tolerance).all();
}

std::map<std::string, std::optional<bool>> StructuralChecks::named() const {
  return {{"determinant", determinant},
          {"functional_equation", functional_equation},
          {"gamma_parity", gamma_parity},
          {"gamma_square_identity", gamma_square_identity},
          {"integrality", integrality},
          {"unit_circle", unit_circle}};
}

bool StructuralChecks::all_passed() const {
  for (const auto& [name, value] : named())
    if (value.has_value() && !*value) return false;
  return true;
}

StructuralChecks structural_checks(const CharPolyResult& result, ModelKind kind, std::uint64_t p) {
  StructuralChecks checks;
  const IntPoly& mu = result.mu;
  checks.integrality = mu.degree() == 2 * kCycDegree && mu.leading() == 1;
  for (const auto& f : result.per_eigenspace) {
    checks.integrality = checks.integrality && f.a_p.is_integral() && f.a_p2.is_integral() && f.b.is_integral();
  }
  const BigInt p20 = ipow(BigInt(p), 2 * kCycDegree);
  checks.determinant = result.determinant == p20 || result.determinant == -p20;
  if (mu.is_zero() || mu.leading() != 1) return checks;

  const RatPoly mu_tilde = normalize(mu, p);
  checks.functional_equation = palindrome_sign(mu_tilde).has_value();
  checks.unit_circle = roots_on_unit_circle(mu_tilde);
  if (kind == ModelKind::kGamma) {
    bool even = true;
    for (int j = 1; j <= mu.degree(); j += 2) even = even && mu.coeff(j) == 0;
    checks.gamma_parity = even;
    if (even) {
      std::vector<BigInt> nu;
      for (int j = 0; j <= mu.degree(); j += 2) nu.push_back(mu.coeff(j));
      const IntPoly nu_p(std::move(nu));
      checks.gamma_square_identity = charpoly_over_p2(result) == nu_p * nu_p;
    } else {
      checks.gamma_square_identity = false;
    }
  }
  return checks;
}

AnalysisReport analyze(const CharPolyResult& result, ModelKind kind) {
  const std::uint64_t p = result.p;
  AnalysisReport report;
  report.mu_tilde = normalize(result.mu, p);
  report.cyclotomic = cyclotomic_factors(report.mu_tilde);
  report.picard_upper = picard_upper_bound(result.mu, p);
  report.newton = newton_polygon(result.mu, p);
  report.height = height_from_newton(result.mu, p);
  report.palindrome = palindrome_sign(report.mu_tilde);
  report.checks = structural_checks(result, kind, p);
  // rho <= b2 - 2h for finite height.
  if (report.height && report.picard_upper > 2 && report.picard_upper > 22 - 2 * *report.height) {
    throw InconsistencyError("Picard bound " + std::to_string(report.picard_upper) + " contradicts height " +
                             std::to_string(*report.height));
  }
  return report;
}

std::string height_to_string(const std::optional<int>& height) { return height ? std::to_string(*height) : "inf"; }

}  // namespace wild11
