#include "wild11/delsarte.hpp"
#include "wild11/errors.hpp"
#include "wild11/kodaira.hpp"
#include "wild11/report.hpp"
#include "wild11/surface.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;
using namespace wild11;

constexpr int kExitUsage = 2;
constexpr int kExitCapability = 3;
constexpr int kExitInconsistency = 4;

struct Options {
  std::string kind;
  std::uint64_t param = 0;
  std::uint64_t p = kWildCharacteristic;
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> cover_p;
  std::string format = "text";
  std::string out;
  bool timing = false;
};

// q = p^r with p prime, r >= 1.
std::pair<std::uint64_t, int> split_prime_power(std::uint64_t q) {
  if (q < 2) throw UsageError("q must be a prime power");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  int r = 0;
  while (q % p == 0) {
    q /= p;
    ++r;
  }
  if (q != 1) throw UsageError("q must be a prime power");
  return {p, r};
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opt.out);
  if (!file) throw UsageError("cannot open " + opt.out + " for writing");
  file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string render(const Options& opt, const Report& r) {
  if (opt.format == "json") return dump(to_json(r));
  if (opt.format == "csv") return format_csv(r);
  return format_text(r);
}

template <typename F>
auto timed(const Options& opt, Report& r, F&& work) {
  const auto start = std::chrono::steady_clock::now();
  work();
  if (opt.timing) r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void cmd_analyze(const Options& opt) {
  const auto kind = parse_model_kind(opt.kind);
  if (kind == ModelKind::kUniform) throw CapabilityError("analyze needs the order-11 action; use --kind epsilon or gamma");
  const auto model = make_model(kind, opt.param, opt.p);
  Report r;
  timed(opt, r, [&] {
    const auto seconds = r.seconds;
    r = analyze_report(model);
    r.seconds = seconds;
  });
  emit(opt, render(opt, r));
}

void cmd_table(const Options& opt) {
  if (opt.p != kWildCharacteristic) throw CapabilityError("the table is defined for p = 11 only");
  const auto start = std::chrono::steady_clock::now();
  const auto rows = frobenius_table();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (opt.format == "json") {
    json j = to_json(rows);
    if (opt.timing) j["meta"]["seconds"] = seconds;
    emit(opt, dump(j));
  } else if (opt.format == "csv") {
    emit(opt, format_csv(rows));
  } else {
    std::string text = format_text(rows);
    if (opt.timing) text += "time: " + std::to_string(seconds) + " s\n";
    emit(opt, text);
  }
}

Report fibers_or_lattice(const Options& opt, const std::string& command) {
  const auto model = make_model(parse_model_kind(opt.kind), opt.param, opt.p);
  Report r;
  timed(opt, r, [&] {
    const auto seconds = r.seconds;
    r = fibers_report(model);
    r.seconds = seconds;
  });
  r.command = command;
  return r;
}

// Characteristics 2 and 3: Kodaira types are out of reach, report the discriminant instead.
void cmd_wild_fibers(const Options& opt, const WeierstrassModel& model) {
  const auto w = wild_delta_report(model);
  if (opt.format == "json") {
    json j;
    j["meta"] = {{"command", "fibers"}, {"tool", "wild11"}};
    j["inputs"] = {{"kind", opt.kind}, {"param", opt.param}, {"p", opt.p}};
    j["wild_discriminant"] = {{"delta", w.delta.to_string()},
                              {"v_zero", w.v_zero},
                              {"v_infinity", w.v_infinity},
                              {"tame_at_infinity", w.tame_at_infinity},
                              {"wild_at_infinity", w.wild_at_infinity}};
    emit(opt, dump(j));
  } else if (opt.format == "csv") {
    emit(opt, "key,value\ndelta," + w.delta.to_string() + "\nv_zero," + std::to_string(w.v_zero) + "\nv_infinity," +
                  std::to_string(w.v_infinity) + "\ntame_at_infinity," + std::to_string(w.tame_at_infinity) +
                  "\nwild_at_infinity," + std::to_string(w.wild_at_infinity) + "\n");
  } else {
    std::ostringstream os;
    os << "fibers: uniform, p = " << opt.p << " (wild; no Kodaira classification)\n"
       << "Delta(t) = " << w.delta.to_string() << "\n"
       << "v_0(Delta) = " << w.v_zero << ", v_inf(Delta) = " << w.v_infinity << " = " << w.tame_at_infinity
       << " (tame, type II) + " << w.wild_at_infinity << " (wild)\n";
    emit(opt, os.str());
  }
}

void cmd_fibers(const Options& opt) {
  const auto kind = parse_model_kind(opt.kind);
  if (kind == ModelKind::kUniform && (opt.p == 2 || opt.p == 3)) {
    cmd_wild_fibers(opt, make_model(kind, opt.param, opt.p));
    return;
  }
  emit(opt, render(opt, fibers_or_lattice(opt, "fibers")));
}

void cmd_lattice(const Options& opt) {
  Report r = fibers_or_lattice(opt, "lattice");
  r.fibers.reset();
  emit(opt, render(opt, r));
}

void cmd_cover(const Options& opt) {
  const auto check = verify_cover_identity();
  std::optional<bool> possible;
  if (opt.cover_p) possible = supersingular_possible(*opt.cover_p);
  if (opt.format == "json") {
    json j;
    j["meta"] = {{"command", "cover-check"}, {"tool", "wild11"}};
    j["cover"] = {{"verified", check.verified},
                  {"cofactor", check.quotient.to_string()},
                  {"remainder", check.remainder.to_string()}};
    if (opt.cover_p) j["supersingular_possible"] = {{"p", *opt.cover_p}, {"value", *possible}};
    emit(opt, dump(j));
  } else if (opt.format == "csv") {
    std::ostringstream os;
    os << "key,value\nverified," << (check.verified ? "true" : "false") << "\ncofactor," << check.quotient.to_string()
       << "\nremainder," << check.remainder.to_string() << "\n";
    if (possible) os << "supersingular_possible," << (*possible ? "true" : "false") << "\n";
    emit(opt, os.str());
  } else {
    std::ostringstream os;
    if (check.verified) {
      os << "verified, cofactor " << check.quotient.to_string() << "\n";
    } else {
      os << "NOT verified, remainder " << check.remainder.to_string() << "\n";
    }
    if (possible) os << "supersingular possible at p = " << *opt.cover_p << ": " << (*possible ? "yes" : "no") << "\n";
    emit(opt, os.str());
  }
  if (!check.verified) throw InconsistencyError("Fermat cover identity failed");
}

void cmd_count(const Options& opt) {
  if (!opt.q) throw UsageError("count needs --q");
  const auto [p, r] = split_prime_power(*opt.q);
  if (r > 4) throw CapabilityError("extension degree above 4 is not supported");
  const auto model = make_model(parse_model_kind(opt.kind), opt.param, p);
  const auto spec = FieldSpec::extension(p, r);
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t n = surface_count(model, spec);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (opt.format == "json") {
    json j;
    j["meta"] = {{"command", "count"}, {"tool", "wild11"}};
    if (opt.timing) j["meta"]["seconds"] = seconds;
    j["inputs"] = {{"kind", opt.kind}, {"param", opt.param}, {"p", p}, {"q", *opt.q}};
    j["count"] = n;
    emit(opt, dump(j));
  } else if (opt.format == "csv") {
    emit(opt, "kind,param,q,count\n" + opt.kind + "," + std::to_string(opt.param) + "," + std::to_string(*opt.q) + "," +
                  std::to_string(n) + "\n");
  } else {
    std::string text = std::to_string(n) + "\n";
    if (opt.timing) text += "time: " + std::to_string(seconds) + " s\n";
    emit(opt, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius, Picard bound and height for elliptic K3 surfaces with an order-11 automorphism"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
    sub->add_option("--out", opt.out, "Write output to this file instead of stdout");
    sub->add_flag("--timing", opt.timing, "Include wall-clock time (makes output non-deterministic)");
  };
  auto add_model = [&opt](CLI::App* sub, bool need_p) {
    sub->add_option("--kind", opt.kind, "epsilon, gamma or uniform")->required();
    sub->add_option("--param", opt.param, "Value of epsilon or gamma in [0, p)");
    if (need_p) sub->add_option("--p", opt.p, "Characteristic (default 11)");
  };

  auto* analyze = app.add_subcommand("analyze", "Frobenius char-poly, Picard bound and height of one surface");
  add_model(analyze, true);
  add_common(analyze);
  auto* table = app.add_subcommand("table", "mu~ for every eps, gamma in F_11^*, by square class");
  table->add_option("--p", opt.p, "Characteristic (only 11)");
  add_common(table);
  auto* fibers = app.add_subcommand("fibers", "Kodaira fibres and trivial lattice");
  add_model(fibers, true);
  add_common(fibers);
  auto* lattice = app.add_subcommand("lattice", "Trivial lattice and Artin invariant");
  add_model(lattice, true);
  add_common(lattice);
  auto* cover = app.add_subcommand("cover-check", "Verify the Fermat cover of the uniform model");
  cover->add_option("--p", opt.cover_p, "Also report whether supersingular reduction is possible at p");
  add_common(cover);
  auto* count = app.add_subcommand("count", "#X(F_q) by fibres (irreducible fibres only)");
  add_model(count, false);
  count->add_option("--q", opt.q, "Field size, a prime power")->required();
  add_common(count);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) cmd_analyze(opt);
    if (*table) cmd_table(opt);
    if (*fibers) cmd_fibers(opt);
    if (*lattice) cmd_lattice(opt);
    if (*cover) cmd_cover(opt);
    if (*count) cmd_count(opt);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapabilityError& e) {
    std::cerr << "not supported: " << e.what() << "\n";
    return kExitCapability;
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return kExitInconsistency;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
