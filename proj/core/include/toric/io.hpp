#pragma once

// Document formats and their JSON serialization: fans, pairs (fan + divisor
// class), and the machine-readable reports the command line tool emits.
// Rationals travel as "p/q" strings, never as decimals.

#include <optional>
#include <string>
#include <vector>

#include "toric/divisor.hpp"
#include "toric/mmp.hpp"
#include "toric/puffing.hpp"

namespace toric::io {

struct FanDocument {
  size_t dimension = 0;
  std::string name;
  std::vector<std::vector<Int>> rays;
  std::vector<std::vector<size_t>> maximal_cones;
};

struct PairDocument {
  FanDocument fan;
  std::string name;
  std::vector<Rat> divisor_coefficients;  // aligned with fan.rays
};

// Document -> domain. Rays are primitivized on load; the fan axioms are
// checked and failures carry the offending pair of cones.
Fan to_fan(const FanDocument& doc);
FanDocument from_fan(const Fan& fan, std::string name = "");

// The pair's class values are the negated divisor coefficients.
DivisorClassOfX to_pair(const PairDocument& doc);

// JSON text <-> documents. Serialization is canonical: sorted keys, two-space
// indent, coefficients in lowest terms.
std::string fan_to_json(const FanDocument& doc);
std::string pair_to_json(const PairDocument& doc);
FanDocument fan_from_json(const std::string& text);
// base_dir resolves a fan reference ("fan": "relative/path.json").
PairDocument pair_from_json(const std::string& text, const std::string& base_dir = "");
bool json_is_pair(const std::string& text);

// Reports.
std::string polytope_json(const Polytope& poly);
std::string minimal_model_report_json(const MinimalModelReport& report, uint64_t seed,
                                      const std::string& input_name);
std::string mmp_report_json(const MMPOutcome& outcome, const std::string& input_name);

// The fields the `verify` cross-check compares.
struct ReportEssentials {
  int box_dim = -1;
  std::vector<std::vector<std::string>> box_vertices;
  std::string kappa;  // decimal integer or "-inf"
};
ReportEssentials essentials_from_report_json(const std::string& text);

}  // namespace toric::io
