#pragma once

// Machine-readable results. Every number is exact: small counts are JSON
// integers, big integers and rationals are strings ("num/den").

#include "wild11/analysis.hpp"
#include "wild11/equivariant.hpp"
#include "wild11/kodaira.hpp"
#include "wild11/numeric.hpp"
#include "wild11/surface.hpp"

#include "json.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wild11 {

struct FiberEntry {
  std::string place;
  std::string type;
  int degree = 1;
  int vdelta = 0;
  std::optional<int> vc4;  // absent when c4 vanishes identically

  friend bool operator==(const FiberEntry&, const FiberEntry&) = default;
};

struct LatticeEntry {
  int rank = 0;
  std::uint64_t abs_disc = 1;
  std::vector<std::string> components;
  std::optional<int> artin_invariant;

  friend bool operator==(const LatticeEntry&, const LatticeEntry&) = default;
};

struct SlopeEntry {
  Rational valuation;
  int multiplicity = 0;
  friend bool operator==(const SlopeEntry&, const SlopeEntry&) = default;
};

struct FrobeniusSection {
  std::array<std::uint64_t, 11> tally_p{};
  std::array<std::uint64_t, 11> tally_p2{};
  std::array<BigInt, 11> traces_p;
  std::array<BigInt, 11> traces_p2;
  std::array<std::array<BigInt, 10>, 10> eigen_p;  // eigen_p[i-1] = coords of a_i(p)
  std::array<std::array<BigInt, 10>, 10> eigen_p2;
  // Observed action of zeta -> zeta^2 on the eigentraces: a_i -> a_{perm[i-1]}.
  std::optional<std::array<int, 10>> galois_s2_p;
  std::optional<std::array<int, 10>> galois_s2_p2;
  std::vector<BigInt> mu;
  std::vector<Rational> mu_tilde;
  int picard_upper = 0;
  int picard_lower = 2;
  std::optional<int> height;  // absent: infinite
  std::vector<SlopeEntry> newton_slopes;
  std::vector<std::pair<int, int>> cyclotomic_factors;  // (k, multiplicity)
  std::map<std::string, std::optional<bool>> checks;

  friend bool operator==(const FrobeniusSection&, const FrobeniusSection&) = default;
};

struct Report {
  std::string command;
  std::string kind;
  std::uint64_t param = 0;
  std::uint64_t p = 0;
  std::optional<FrobeniusSection> frobenius;
  std::optional<std::vector<FiberEntry>> fibers;
  std::optional<LatticeEntry> lattice;
  std::optional<double> seconds;  // only when timing was requested

  friend bool operator==(const Report&, const Report&) = default;
};

/// The full equivariant pipeline plus analysis for an epsilon/gamma model.
Report analyze_report(const WeierstrassModel& model);
/// Kodaira fibres and trivial lattice.
Report fibers_report(const WeierstrassModel& model);

nlohmann::json to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);
std::string format_text(const Report& report);
std::string format_csv(const Report& report);

struct TableRow {
  std::string kind;
  bool square_class = true;
  std::vector<std::uint64_t> members;
  std::vector<Rational> mu_tilde;
};

/// mu~ for every eps, gamma in F_11^*, grouped by square class. Throws
/// InconsistencyError when two members of a class disagree.
std::vector<TableRow> frobenius_table();

nlohmann::json to_json(const std::vector<TableRow>& rows);
std::string format_text(const std::vector<TableRow>& rows);
std::string format_csv(const std::vector<TableRow>& rows);

}  // namespace wild11
