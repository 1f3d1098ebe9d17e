// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every criterion passes or the only failures are the
// ones listed in kKnownUnattainable (explained in the README); the FAIL line
// is printed either way.

#include "golden.hpp"
#include "wild11/analysis.hpp"
#include "wild11/delsarte.hpp"
#include "wild11/errors.hpp"
#include "wild11/kodaira.hpp"
#include "wild11/surface.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace wild11;

namespace {

constexpr std::uint64_t kP = 11;

// Criterion 8 asks that a mis-signed bucket index break the table. It cannot:
// n -> -n swaps a_i with a_{-i}, and mu is symmetric under that swap.
const std::set<int> kKnownUnattainable{8};

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Timer {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

bool is_square_mod_11(std::uint64_t a) { return a == 1 || a == 3 || a == 4 || a == 5 || a == 9; }

const std::vector<Rational>& expected_row(ModelKind kind, std::uint64_t param) {
  if (kind == ModelKind::kEpsilon) return is_square_mod_11(param) ? golden::kEpsSquare : golden::kEpsNonSquare;
  return is_square_mod_11(param) ? golden::kGammaSquare : golden::kGammaNonSquare;
}

struct Surface {
  ModelKind kind;
  std::uint64_t param;
  FrobeniusData data;
  AnalysisReport analysis;
};

std::string label(ModelKind kind, std::uint64_t param) { return to_string(kind) + "=" + std::to_string(param); }

std::vector<std::pair<ModelKind, std::uint64_t>> generic_params() {
  std::vector<std::pair<ModelKind, std::uint64_t>> out;
  for (auto kind : {ModelKind::kEpsilon, ModelKind::kGamma})
    for (std::uint64_t a = 1; a < kP; ++a) out.emplace_back(kind, a);
  return out;
}

// Criterion 1 comparison, shared with the mis-sign control.
std::vector<std::string> table_mismatches(const std::function<IntPoly(ModelKind, std::uint64_t)>& mu_of) {
  std::vector<std::string> bad;
  for (const auto& [kind, param] : generic_params()) {
    try {
      if (normalize(mu_of(kind, param), kP).coeffs() != expected_row(kind, param)) bad.push_back(label(kind, param));
    } catch (const InconsistencyError& e) {
      bad.push_back(label(kind, param) + " (" + e.what() + ")");
    }
  }
  return bad;
}

std::string join(const std::vector<std::string>& v, std::size_t limit = 4) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size() && k < limit; ++k) os << (k ? ", " : "") << v[k];
  if (v.size() > limit) os << ", ... (" << v.size() << " total)";
  return os.str();
}

Outcome criterion1(const std::map<std::string, Surface>& surfaces, double seconds) {
  const auto bad = table_mismatches([&](ModelKind k, std::uint64_t a) { return surfaces.at(label(k, a)).data.charpoly.mu; });
  Outcome o;
  o.pass = bad.empty() && seconds < 10.0;
  std::ostringstream os;
  os << "20 surfaces, 4 distinct rows matched exactly in " << seconds << " s";
  if (!bad.empty()) os << "; mismatches: " << join(bad);
  o.detail = os.str();
  return o;
}

Outcome criterion2(const std::map<std::string, Surface>& surfaces) {
  std::vector<std::string> bad;
  for (const auto& [kind, param] : generic_params())
    if (surfaces.at(label(kind, param)).analysis.picard_upper != 2) bad.push_back(label(kind, param));
  const int rho0 = surfaces.at(label(ModelKind::kEpsilon, 0)).analysis.picard_upper;
  if (rho0 != 22) bad.push_back("epsilon=0 gives " + std::to_string(rho0));
  return {bad.empty(), bad.empty() ? "rho <= 2 on all 20 generic surfaces, rho = 22 at epsilon=0" : join(bad)};
}

Outcome criterion3(const std::map<std::string, Surface>& surfaces) {
  const std::vector<Slope> expected{{Rational(9, 10), 10}, {Rational(11, 10), 10}};
  std::vector<std::string> bad;
  for (const auto& [kind, param] : generic_params()) {
    const auto& a = surfaces.at(label(kind, param)).analysis;
    if (a.height != 10 || a.newton.slopes != expected) bad.push_back(label(kind, param));
  }
  const auto& ss = surfaces.at(label(ModelKind::kEpsilon, 0)).analysis;
  if (ss.height.has_value()) bad.push_back("epsilon=0 has finite height");
  return {bad.empty(),
          bad.empty() ? "h = 10 with slopes {9/10 x10, 11/10 x10} on all 20, h = inf at epsilon=0" : join(bad)};
}

Outcome criterion4() {
  std::vector<std::string> bad;
  const auto f11 = FieldSpec::prime(kP);
  const auto f1331 = FieldSpec::extension(kP, 3);
  double big_seconds = 0;
  for (std::uint64_t gamma = 1; gamma < kP; ++gamma) {
    const auto model = make_model(ModelKind::kGamma, gamma, kP);
    if (surface_count(model, f11) != 144) bad.push_back("#X(F_11) for gamma=" + std::to_string(gamma));
    Timer t;
    const auto n = surface_count(model, f1331);
    big_seconds += t.seconds();
    if (n != 1774224) bad.push_back("#X(F_1331) = " + std::to_string(n) + " for gamma=" + std::to_string(gamma));
    for (const auto* spec : {&f11, &f1331}) {
      const auto chi = quadratic_character_table(*spec);
      for (std::uint64_t i = 1; i < spec->q(); ++i) {
        const auto t0 = spec->at(i);
        if (t0 == spec->zero()) continue;
        if (fiber_count(model, t0, *spec, chi) + fiber_count(model, spec->neg(t0), *spec, chi) != 2 * spec->q() + 2) {
          bad.push_back("pairing at q=" + std::to_string(spec->q()) + ", gamma=" + std::to_string(gamma));
          break;
        }
      }
    }
  }
  const double per_surface = big_seconds / 10;
  if (per_surface >= 60.0) bad.push_back("q=1331 count took " + std::to_string(per_surface) + " s");
  std::ostringstream os;
  os << "144 and 1774224 for every gamma in F_11^*, pairing holds on F_11^* and F_1331^*; q=1331 count "
     << per_surface << " s per surface";
  return {bad.empty(), bad.empty() ? os.str() : join(bad)};
}

Outcome criterion5(const std::map<std::string, Surface>& surfaces) {
  std::vector<std::string> bad;
  for (std::uint64_t eps = 0; eps < kP; ++eps) {
    const auto model = make_model(ModelKind::kEpsilon, eps, kP);
    const auto& data = surfaces.at(label(ModelKind::kEpsilon, eps)).data;
    for (const auto& [tally, eigen] : {std::pair{&data.tally_p, &data.eigen_p}, std::pair{&data.tally_p2, &data.eigen_p2}}) {
      const std::uint64_t q = tally->q;
      const std::uint64_t fiberwise = surface_count(model, FieldSpec::extension(kP, q == kP ? 1 : 2));
      const auto sum = as_rational(eigen->sum());
      const bool lefschetz = sum && *sum + 1 + 2 * q + q * q == Rational(fiberwise);
      if (tally->fix[0] != fiberwise || !lefschetz) bad.push_back("epsilon=" + std::to_string(eps) + ", q=" + std::to_string(q));
    }
  }
  return {bad.empty(), bad.empty() ? "Fix_0 = fiberwise count = 1 + 2q + sum a_i + q^2 for 11 epsilons, q in {11, 121}"
                                   : join(bad)};
}

Outcome criterion6(const std::map<std::string, Surface>& surfaces) {
  std::vector<std::string> bad;
  int checked = 0;
  for (const auto& [name, s] : surfaces) {
    ++checked;
    const auto& c = s.analysis.checks;
    const auto& d = s.data;
    if (!c.integrality) bad.push_back(name + " integrality");
    if (!c.functional_equation) bad.push_back(name + " palindrome");
    if (!c.determinant) bad.push_back(name + " determinant");
    if (s.kind == ModelKind::kGamma && (c.gamma_parity != true || c.gamma_square_identity != true))
      bad.push_back(name + " gamma parity / square identity");
    for (const auto* tally : {&d.tally_p, &d.tally_p2}) {
      const std::uint64_t q = tally->q;
      if (tally->total() != 11 * (2 * q + 1) + 11 * q * q) bad.push_back(name + " tally total at q=" + std::to_string(q));
    }
    for (const auto* e : {&d.eigen_p, &d.eigen_p2}) {
      for (const auto& a : e->a)
        if (!a.is_integral()) bad.push_back(name + " a_i not in Z[zeta]");
      if (!is_galois_stable(*e)) bad.push_back(name + " not Galois-stable");
    }
  }
  std::ostringstream os;
  os << checked << " surfaces: mu in Z[T], palindromic, prod b_i = +-11^20, tally totals, a_i in Z[zeta] and Galois-stable; "
     << "gamma rows even with mu_{p^2} = nu^2";
  return {bad.empty(), bad.empty() ? os.str() : join(bad)};
}

Outcome criterion7() {
  Timer timer;
  std::vector<std::string> bad;
  using F = KodairaType::Family;
  const KodairaType i1{F::kIn, 1}, i11{F::kIn, 11}, ii{F::kII, 0};

  const auto f7 = classify_fibers(make_model(ModelKind::kUniform, 0, 7));
  if (count_fibers(f7, ii) != 1 || count_fibers(f7, i11) != 1 || count_fibers(f7, i1) != 11 || f7.size() != 4)
    bad.push_back("p=7 fibres");

  const auto f11 = classify_fibers(make_model(ModelKind::kUniform, 0, 11));
  std::vector<std::uint64_t> i11_at;
  for (const auto& f : f11)
    if (f.type == i11 && f.place.where == FiberPlace::Where::kRational) i11_at.push_back(f.place.t0);
  if (count_fibers(f11, ii) != 1 || f11.size() != 3 || i11_at != std::vector<std::uint64_t>{0, 7}) bad.push_back("p=11 fibres");

  const auto lattice = trivial_lattice(f11);
  if (lattice.rank != 22 || lattice.abs_disc != 121 || artin_invariant(lattice, 11) != 1) bad.push_back("lattice");

  const auto cover = verify_cover_identity();
  if (!cover.verified || cover.quotient.to_string() != "u^33 v^22") bad.push_back("cover identity");

  int primes = 0;
  for (std::uint64_t p = 2; p < 1000; ++p) {
    if (!is_prime(p)) continue;
    ++primes;
    const bool expected = p == 11 || is_nonsquare_mod_11(p);
    if (supersingular_possible(p) != expected) bad.push_back("predicate at p=" + std::to_string(p));
  }
  const double seconds = timer.seconds();
  if (seconds >= 5.0) bad.push_back("took " + std::to_string(seconds) + " s");
  std::ostringstream os;
  os << "II + I_11 + 11 I_1 at p=7; II + I_11@0 + I_11@7 at p=11; rank 22, disc 121, sigma 1; cofactor u^33 v^22; "
     << "predicate on " << primes << " primes; " << seconds << " s";
  return {bad.empty(), bad.empty() ? os.str() : join(bad)};
}

Outcome criterion8(std::vector<std::string>& notes) {
  std::vector<std::string> bad;

  // (a) Mis-signed bucket index, n = +Tr(c), run through the whole pipeline.
  const auto mis = table_mismatches([](ModelKind k, std::uint64_t a) {
    return compute_frobenius(make_model(k, a, kP), BucketSign::kTrace).charpoly.mu;
  });
  if (mis.empty()) {
    bad.push_back("mis-signed bucket index still reproduces all 20 rows (n -> -n only swaps a_i and a_{-i})");
  }
  notes.push_back("mis-signed tallies: table mismatches on " + std::to_string(mis.size()) + " of 20 surfaces");

  // Supplementary: the sign wrong in the q = p^2 tally only.
  {
    std::vector<std::string> caught;
    for (const auto& [kind, param] : generic_params()) {
      const auto model = make_model(kind, param, kP);
      try {
        const auto ep = inverse_dft(traces_from_tally(fixed_locus_tally(model, FieldSpec::prime(kP))), kP);
        const auto ep2 = inverse_dft(
            traces_from_tally(fixed_locus_tally(model, FieldSpec::extension(kP, 2), BucketSign::kTrace)), kP * kP);
        const auto mu = assemble_charpoly(ep, ep2, kP).mu;
        if (normalize(mu, kP).coeffs() != expected_row(kind, param)) caught.push_back(label(kind, param));
      } catch (const InconsistencyError&) {
        caught.push_back(label(kind, param));
      }
    }
    notes.push_back("sign flipped in the q=p^2 tally only: caught on " + std::to_string(caught.size()) + " of 20 surfaces");
  }

  // (b) Hand-corrupted tally: one spurious fixed point in bucket 3.
  {
    auto tally = fixed_locus_tally(make_model(ModelKind::kEpsilon, 1, kP), FieldSpec::prime(kP));
    tally.fix[3] += 1;
    bool caught = false;
    try {
      inverse_dft(traces_from_tally(tally), kP);
    } catch (const InconsistencyError& e) {
      caught = std::string(e.what()).find("a_0") != std::string::npos;
    }
    if (!caught) bad.push_back("corrupted tally not rejected with the a_0 != 2q error");
  }

  // (c) Reducible fibres are refused.
  {
    bool refused = false;
    try {
      surface_count(make_model(ModelKind::kUniform, 0, kP), FieldSpec::prime(kP));
    } catch (const CapabilityError&) {
      refused = true;
    }
    if (!refused) bad.push_back("surface_count accepted the uniform model");
  }

  return {bad.empty(), bad.empty() ? "all three controls caught" : join(bad) + "; corrupted tally and reducible fibre controls checked"};
}

}  // namespace

int main() {
  std::map<std::string, Surface> surfaces;
  Timer table_timer;
  for (const auto& [kind, param] : generic_params()) {
    auto data = compute_frobenius(make_model(kind, param, kP));
    auto analysis = analyze(data.charpoly, kind);
    surfaces.emplace(label(kind, param), Surface{kind, param, std::move(data), std::move(analysis)});
  }
  const double table_seconds = table_timer.seconds();
  for (std::uint64_t eps : {0}) {
    auto data = compute_frobenius(make_model(ModelKind::kEpsilon, eps, kP));
    auto analysis = analyze(data.charpoly, ModelKind::kEpsilon);
    surfaces.emplace(label(ModelKind::kEpsilon, eps), Surface{ModelKind::kEpsilon, eps, std::move(data), std::move(analysis)});
  }

  std::vector<std::string> notes;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"table reproduction", [&] { return criterion1(surfaces, table_seconds); }},
      {"Picard bound", [&] { return criterion2(surfaces); }},
      {"height and Newton slopes", [&] { return criterion3(surfaces); }},
      {"counting identities", [] { return criterion4(); }},
      {"oracle equivalence", [&] { return criterion5(surfaces); }},
      {"structural suite", [&] { return criterion6(surfaces); }},
      {"uniform model suite", [] { return criterion7(); }},
      {"negative controls", [&] { return criterion8(notes); }},
  };

  int unexpected = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int number = static_cast<int>(k) + 1;
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::cout << "criterion " << number << " " << (o.pass ? "PASS" : "FAIL") << " [" << criteria[k].first << "] "
              << o.detail;
    if (!o.pass && kKnownUnattainable.count(number)) std::cout << " (known unattainable, see README)";
    std::cout << "\n";
    if (!o.pass && !kKnownUnattainable.count(number)) ++unexpected;
  }
  for (const auto& n : notes) std::cout << "note: " << n << "\n";
  return unexpected == 0 ? 0 : 1;
}
