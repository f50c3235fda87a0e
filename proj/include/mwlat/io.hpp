#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mwlat/model.hpp"
#include "mwlat/realizability.hpp"

namespace mwlat {

inline constexpr const char* kSchemaAnalyze = "mwlat.analyze/1";
inline constexpr const char* kSchemaSweep = "mwlat.sweep/1";
inline constexpr const char* kSchemaModel = "mwlat.model/1";
inline constexpr const char* kSchemaDyment = "mwlat.dyment/1";

/// Parses the text format
///   poset <n>
///   [<index> <name>]...
///   covers
///   <a> <b>        (a covered by b)
/// or the JSON equivalent {"size": n, "labels": [...], "covers": [[a,b],...]}.
/// Blank lines and lines starting with '#' are ignored in the text format.
/// Throws ParseError with a 1-based line number.
Poset parse_poset(std::string_view text);

std::string poset_to_text(const Poset& p);
nlohmann::json poset_to_json(const Poset& p);

/// Hasse diagram in DOT, covers as edges, bottom ranked lowest.
std::string poset_to_dot(const Poset& p);

/// FNV-1a 64-bit digest, prefixed "fnv1a64:".
std::string digest(std::string_view bytes);

/// Full realizability analysis of one lattice. Round-trips through JSON.
struct AnalysisReport {
  std::string input_digest;
  int size = 0;
  bool distributive = false;
  std::vector<Elem> join_irreducibles;
  std::vector<std::pair<Elem, Elem>> birkhoff_covers;
  bool dd_like = false;
  std::optional<std::pair<Elem, Elem>> dd_subinterval;
  bool realizable = false;
  bool initial_segment_realizable = false;
  RealizabilityVerdict verdict;

  friend bool operator==(const AnalysisReport& a, const AnalysisReport& b);
};

AnalysisReport analyze(const Lattice& l, std::string_view input_bytes);

nlohmann::json analysis_to_json(const AnalysisReport& r);
AnalysisReport analysis_from_json(const nlohmann::json& j);

/// Per-lattice report fragment: size, distributivity, join-irreducible
/// indices and the Birkhoff poset.
nlohmann::json lattice_report_json(const Lattice& l);

nlohmann::json sweep_report_json(const SweepReport& r);
nlohmann::json f_iso_report_json(const FIsoReport& r, const Poset& base);
nlohmann::json dyment_report_json(const DymentScanReport& r);

}  // namespace mwlat
