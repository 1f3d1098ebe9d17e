#include "wild11/report.hpp"

#include "wild11/errors.hpp"

#include <sstream>

namespace wild11 {
namespace {

using nlohmann::json;

template <std::size_t N>
json big_array(const std::array<BigInt, N>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

template <std::size_t N>
std::array<BigInt, N> parse_big_array(const json& j) {
  if (j.size() != N) throw UsageError("report array has the wrong length");
  std::array<BigInt, N> out;
  for (std::size_t k = 0; k < N; ++k) out[k] = BigInt(j.at(k).get<std::string>());
  return out;
}

json opt_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

std::array<std::array<BigInt, 10>, 10> eigen_coords(const EigenTraces& e) {
  std::array<std::array<BigInt, 10>, 10> out;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) out[i][j] = boost::multiprecision::numerator(e.a[i][j]);
  }
  return out;
}

std::string rational_list(const std::vector<Rational>& v) {
  std::ostringstream os;
  for (std::size_t j = 0; j < v.size(); ++j) os << (j ? " " : "") << to_string(v[j]);
  return os.str();
}

}  // namespace

Report analyze_report(const WeierstrassModel& model) {
  const FrobeniusData data = compute_frobenius(model);
  const AnalysisReport analysis = analyze(data.charpoly, model.kind);
  Report r;
  r.command = "analyze";
  r.kind = to_string(model.kind);
  r.param = model.param;
  r.p = model.p;
  FrobeniusSection f;
  f.tally_p = data.tally_p.fix;
  f.tally_p2 = data.tally_p2.fix;
  f.traces_p = data.traces_p;
  f.traces_p2 = data.traces_p2;
  f.eigen_p = eigen_coords(data.eigen_p);
  f.eigen_p2 = eigen_coords(data.eigen_p2);
  f.galois_s2_p = galois_permutation(data.eigen_p, 2);
  f.galois_s2_p2 = galois_permutation(data.eigen_p2, 2);
  f.mu = data.charpoly.mu.coeffs();
  f.mu_tilde = analysis.mu_tilde.coeffs();
  f.picard_upper = analysis.picard_upper;
  f.picard_lower = analysis.picard_lower;
  f.height = analysis.height;
  for (const auto& s : analysis.newton.slopes) f.newton_slopes.push_back({s.valuation, s.multiplicity});
  for (const auto& c : analysis.cyclotomic) f.cyclotomic_factors.emplace_back(c.k, c.multiplicity);
  f.checks = analysis.checks.named();
  r.frobenius = std::move(f);
  return r;
}

Report fibers_report(const WeierstrassModel& model) {
  Report r;
  r.command = "fibers";
  r.kind = to_string(model.kind);
  r.param = model.param;
  r.p = model.p;
  const auto fibers = classify_fibers(model);
  std::vector<FiberEntry> entries;
  for (const auto& f : fibers) {
    entries.push_back({f.place.label(), f.type.name(), f.place.degree, f.place.vdelta,
                       f.place.vc4 == kInfiniteValuation ? std::nullopt : std::optional<int>(f.place.vc4)});
  }
  r.fibers = std::move(entries);
  const LatticeSummary ls = trivial_lattice(fibers);
  r.lattice = LatticeEntry{ls.rank, ls.abs_disc, ls.components, artin_invariant(ls, model.p)};
  return r;
}

json to_json(const Report& report) {
  json j;
  j["meta"] = {{"command", report.command}, {"tool", "wild11"}};
  if (report.seconds) j["meta"]["seconds"] = *report.seconds;
  j["inputs"] = {{"kind", report.kind}, {"param", report.param}, {"p", report.p}};
  if (const auto& f = report.frobenius) {
    j["tally"] = {{"q_p", f->tally_p}, {"q_p2", f->tally_p2}};
    j["traces"] = {{"q_p", big_array(f->traces_p)}, {"q_p2", big_array(f->traces_p2)}};
    json ep = json::array();
    json ep2 = json::array();
    for (int i = 0; i < 10; ++i) {
      ep.push_back(big_array(f->eigen_p[i]));
      ep2.push_back(big_array(f->eigen_p2[i]));
    }
    auto perm = [](const std::optional<std::array<int, 10>>& p) { return p ? json(*p) : json(nullptr); };
    j["eigentraces"] = {{"q_p", ep}, {"q_p2", ep2}, {"galois_s2", {{"q_p", perm(f->galois_s2_p)}, {"q_p2", perm(f->galois_s2_p2)}}}};
    json mu = json::array();
    for (const auto& c : f->mu) mu.push_back(to_string(c));
    json mut = json::array();
    for (const auto& c : f->mu_tilde) mut.push_back(to_string(c));
    j["charpoly"] = {{"mu", mu}, {"mu_tilde", mut}};
    json slopes = json::array();
    for (const auto& s : f->newton_slopes) slopes.push_back({{"valuation", to_string(s.valuation)}, {"multiplicity", s.multiplicity}});
    json cyc = json::array();
    for (const auto& [k, m] : f->cyclotomic_factors) cyc.push_back({{"k", k}, {"multiplicity", m}});
    json checks = json::object();
    for (const auto& [name, value] : f->checks) checks[name] = opt_bool(value);
    j["analysis"] = {{"picard_upper", f->picard_upper},
                     {"picard_lower", f->picard_lower},
                     {"height", f->height ? json(std::to_string(*f->height)) : json("inf")},
                     {"newton_slopes", slopes},
                     {"cyclotomic_factors", cyc},
                     {"checks", checks}};
  }
  if (const auto& fibers = report.fibers) {
    j["fibers"] = json::array();
    for (const auto& e : *fibers) {
      j["fibers"].push_back({{"place", e.place},
                             {"type", e.type},
                             {"degree", e.degree},
                             {"vdelta", e.vdelta},
                             {"vc4", e.vc4 ? json(*e.vc4) : json("inf")}});
    }
  }
  if (const auto& ls = report.lattice) {
    j["lattice"] = {{"rank", ls->rank},
                    {"abs_disc", ls->abs_disc},
                    {"components", ls->components},
                    {"artin_invariant", ls->artin_invariant ? json(*ls->artin_invariant) : json(nullptr)}};
  }
  return j;
}

Report report_from_json(const json& j) {
  try {
    Report r;
    r.command = j.at("meta").at("command").get<std::string>();
    if (j.at("meta").contains("seconds")) r.seconds = j.at("meta").at("seconds").get<double>();
    r.kind = j.at("inputs").at("kind").get<std::string>();
    r.param = j.at("inputs").at("param").get<std::uint64_t>();
    r.p = j.at("inputs").at("p").get<std::uint64_t>();
    if (j.contains("tally")) {
      FrobeniusSection f;
      f.tally_p = j.at("tally").at("q_p").get<std::array<std::uint64_t, 11>>();
      f.tally_p2 = j.at("tally").at("q_p2").get<std::array<std::uint64_t, 11>>();
      f.traces_p = parse_big_array<11>(j.at("traces").at("q_p"));
      f.traces_p2 = parse_big_array<11>(j.at("traces").at("q_p2"));
      for (int i = 0; i < 10; ++i) {
        f.eigen_p[i] = parse_big_array<10>(j.at("eigentraces").at("q_p").at(i));
        f.eigen_p2[i] = parse_big_array<10>(j.at("eigentraces").at("q_p2").at(i));
      }
      auto perm = [](const json& p) {
        return p.is_null() ? std::nullopt : std::optional<std::array<int, 10>>(p.get<std::array<int, 10>>());
      };
      f.galois_s2_p = perm(j.at("eigentraces").at("galois_s2").at("q_p"));
      f.galois_s2_p2 = perm(j.at("eigentraces").at("galois_s2").at("q_p2"));
      for (const auto& c : j.at("charpoly").at("mu")) f.mu.emplace_back(c.get<std::string>());
      for (const auto& c : j.at("charpoly").at("mu_tilde")) f.mu_tilde.push_back(parse_rational(c.get<std::string>()));
      const json& a = j.at("analysis");
      f.picard_upper = a.at("picard_upper").get<int>();
      f.picard_lower = a.at("picard_lower").get<int>();
      const auto h = a.at("height").get<std::string>();
      if (h != "inf") f.height = std::stoi(h);
      for (const auto& s : a.at("newton_slopes"))
        f.newton_slopes.push_back({parse_rational(s.at("valuation").get<std::string>()), s.at("multiplicity").get<int>()});
      for (const auto& c : a.at("cyclotomic_factors"))
        f.cyclotomic_factors.emplace_back(c.at("k").get<int>(), c.at("multiplicity").get<int>());
      for (const auto& [name, value] : a.at("checks").items())
        f.checks[name] = value.is_null() ? std::nullopt : std::optional<bool>(value.get<bool>());
      r.frobenius = std::move(f);
    }
    if (j.contains("fibers")) {
      std::vector<FiberEntry> fibers;
      for (const auto& e : j.at("fibers")) {
        const json& vc4 = e.at("vc4");
        fibers.push_back({e.at("place").get<std::string>(), e.at("type").get<std::string>(), e.at("degree").get<int>(),
                          e.at("vdelta").get<int>(), vc4.is_string() ? std::nullopt : std::optional<int>(vc4.get<int>())});
      }
      r.fibers = std::move(fibers);
    }
    if (j.contains("lattice")) {
      const json& l = j.at("lattice");
      LatticeEntry ls;
      ls.rank = l.at("rank").get<int>();
      ls.abs_disc = l.at("abs_disc").get<std::uint64_t>();
      ls.components = l.at("components").get<std::vector<std::string>>();
      if (!l.at("artin_invariant").is_null()) ls.artin_invariant = l.at("artin_invariant").get<int>();
      r.lattice = std::move(ls);
    }
    return r;
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed report: ") + e.what());
  }
}

std::string format_text(const Report& report) {
  std::ostringstream os;
  os << report.command << ": " << report.kind;
  if (report.kind != "uniform") os << " = " << report.param;
  os << ", p = " << report.p << "\n";
  if (const auto& f = report.frobenius) {
    auto list = [&os](const char* label, const auto& values) {
      os << label;
      for (const auto& v : values) os << " " << v;
      os << "\n";
    };
    list("tally q=p:  ", f->tally_p);
    list("tally q=p^2:", f->tally_p2);
    list("tr_n q=p:   ", f->traces_p);
    list("tr_n q=p^2: ", f->traces_p2);
    if (f->galois_s2_p) {
      os << "zeta->zeta^2 on a_i(p):";
      for (int i = 0; i < 10; ++i) os << " " << i + 1 << "->" << (*f->galois_s2_p)[i];
      os << "\n";
    }
    os << "mu_p(T)  = " << format_poly(IntPoly(f->mu)) << "\n";
    os << "mu~(T)   = " << format_poly(RatPoly(f->mu_tilde)) << "\n";
    os << "picard   : " << f->picard_lower << " <= rho <= " << f->picard_upper << "\n";
    os << "height   : " << height_to_string(f->height) << "\n";
    os << "slopes   :";
    for (const auto& s : f->newton_slopes) os << " " << to_string(s.valuation) << " x" << s.multiplicity;
    os << "\n";
    os << "checks   :";
    for (const auto& [name, value] : f->checks) os << " " << name << "=" << (value ? (*value ? "ok" : "FAIL") : "n/a");
    os << "\n";
  }
  if (const auto& fibers = report.fibers) {
    for (const auto& e : *fibers) {
      os << "fibre " << e.type << " at " << e.place;
      if (e.degree > 1) os << " (degree " << e.degree << ")";
      os << "  v(Delta)=" << e.vdelta << " v(c4)=" << (e.vc4 ? std::to_string(*e.vc4) : "inf") << "\n";
    }
  }
  if (const auto& ls = report.lattice) {
    os << "trivial lattice: rank " << ls->rank << ", |disc| " << ls->abs_disc << ", U";
    for (const auto& c : ls->components) os << " + " << c;
    os << "\n";
    if (ls->artin_invariant) os << "artin invariant: " << *ls->artin_invariant << "\n";
  }
  if (report.seconds) os << "time: " << *report.seconds << " s\n";
  return os.str();
}

std::string format_csv(const Report& report) {
  std::ostringstream os;
  os << "section,key,value\n";
  os << "inputs,kind," << report.kind << "\ninputs,param," << report.param << "\ninputs,p," << report.p << "\n";
  if (const auto& f = report.frobenius) {
    for (int n = 0; n < 11; ++n) os << "tally_p," << n << "," << f->tally_p[n] << "\n";
    for (int n = 0; n < 11; ++n) os << "tally_p2," << n << "," << f->tally_p2[n] << "\n";
    for (int n = 0; n < 11; ++n) os << "traces_p," << n << "," << f->traces_p[n] << "\n";
    for (int n = 0; n < 11; ++n) os << "traces_p2," << n << "," << f->traces_p2[n] << "\n";
    for (std::size_t j = 0; j < f->mu.size(); ++j) os << "mu," << j << "," << f->mu[j] << "\n";
    for (std::size_t j = 0; j < f->mu_tilde.size(); ++j) os << "mu_tilde," << j << "," << to_string(f->mu_tilde[j]) << "\n";
    os << "analysis,picard_upper," << f->picard_upper << "\n";
    os << "analysis,picard_lower," << f->picard_lower << "\n";
    os << "analysis,height," << height_to_string(f->height) << "\n";
    for (const auto& [name, value] : f->checks)
      os << "checks," << name << "," << (value ? (*value ? "true" : "false") : "n/a") << "\n";
  }
  if (const auto& fibers = report.fibers) {
    for (const auto& e : *fibers) os << "fibers," << e.place << "," << e.type << " x" << e.degree << "\n";
  }
  if (const auto& ls = report.lattice) {
    os << "lattice,rank," << ls->rank << "\nlattice,abs_disc," << ls->abs_disc << "\n";
    if (ls->artin_invariant) os << "lattice,artin_invariant," << *ls->artin_invariant << "\n";
  }
  return os.str();
}

std::vector<TableRow> frobenius_table() {
  std::vector<TableRow> rows;
  for (ModelKind kind : {ModelKind::kEpsilon, ModelKind::kGamma}) {
    for (bool square : {true, false}) {
      TableRow row;
      row.kind = to_string(kind);
      row.square_class = square;
      for (std::uint64_t param = 1; param < kWildCharacteristic; ++param) {
        const bool is_square = quadratic_character(FieldSpec::prime(kWildCharacteristic).from_base(param),
                                                   FieldSpec::prime(kWildCharacteristic)) == 1;
        if (is_square != square) continue;
        const auto model = make_model(kind, param, kWildCharacteristic);
        const auto mu_tilde = normalize(compute_frobenius(model).charpoly.mu, kWildCharacteristic).coeffs();
        if (row.members.empty()) {
          row.mu_tilde = mu_tilde;
        } else if (mu_tilde != row.mu_tilde) {
          throw InconsistencyError(row.kind + " = " + std::to_string(param) + " disagrees with its square class");
        }
        row.members.push_back(param);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

nlohmann::json to_json(const std::vector<TableRow>& rows) {
  json j;
  j["meta"] = {{"command", "table"}, {"tool", "wild11"}, {"p", kWildCharacteristic}};
  j["rows"] = json::array();
  for (const auto& row : rows) {
    json coeffs = json::array();
    for (const auto& c : row.mu_tilde) coeffs.push_back(to_string(c));
    j["rows"].push_back({{"kind", row.kind},
                         {"class", row.square_class ? "square" : "non-square"},
                         {"members", row.members},
                         {"mu_tilde", coeffs}});
  }
  return j;
}

std::string format_text(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) {
    os << row.kind << " in {";
    for (std::size_t k = 0; k < row.members.size(); ++k) os << (k ? "," : "") << row.members[k];
    os << "}: " << format_poly(RatPoly(row.mu_tilde)) << "\n";
  }
  return os.str();
}

std::string format_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "kind,class,members,mu_tilde_ascending\n";
  for (const auto& row : rows) {
    os << row.kind << "," << (row.square_class ? "square" : "non-square") << ",";
    for (std::size_t k = 0; k < row.members.size(); ++k) os << (k ? " " : "") << row.members[k];
    os << "," << rational_list(row.mu_tilde) << "\n";
  }
  return os.str();
}

}  // namespace wild11
