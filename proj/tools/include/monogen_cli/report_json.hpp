#ifndef MONOGEN_CLI_REPORT_JSON_HPP_
#define MONOGEN_CLI_REPORT_JSON_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "monogen/factorint.hpp"
#include "monogen/monogenic.hpp"
#include "monogen/newton_ore.hpp"

namespace monogen::cli {

using Json = nlohmann::ordered_json;

// Carried in the document but not part of the report itself.
struct RunMeta {
  std::string effort = "default";
  double elapsed_ms = 0;
};

struct FactorDoc {
  Integer x;
  Budget budget;
  Factorization factorization;
  friend bool operator==(const FactorDoc&, const FactorDoc&) = default;
};

struct OrbitDoc {
  unsigned long p = 0;
  Integer a;
  unsigned N = 0;
  std::vector<Integer> values;  // f^1(0), ..., f^N(0)
  friend bool operator==(const OrbitDoc&, const OrbitDoc&) = default;
};

struct PolygonDoc {
  IntPoly f;
  unsigned long prime = 0;
  std::optional<IntPoly> phi;  // as given on the command line
  std::vector<PhiAnalysis> analyses;
  friend bool operator==(const PolygonDoc&, const PolygonDoc&) = default;
};

struct DissectDoc {
  IntPoly f;
  unsigned long prime = 0;
  DissectionReport report;
  friend bool operator==(const DissectDoc&, const DissectDoc&) = default;
};

/* One document per invocation:
 *
 *   { "tool": {name, version}, "command", "inputs", "effort": {level,
 *     trial_bound, rho_iterations, seed, elapsed_ms}, "result" }
 *
 * Big integers are decimal strings; infinite valuations are "inf".
 * parse_*(emit(doc, meta)) == doc.
 */
Json emit(const TowerReport& report, const RunMeta& meta);
Json emit(const FactorDoc& doc, const RunMeta& meta);
Json emit(const OrbitDoc& doc, const RunMeta& meta);
Json emit(const PolygonDoc& doc, const RunMeta& meta);
Json emit(const DissectDoc& doc, const RunMeta& meta);

// Throw nlohmann::json::exception or std::invalid_argument on malformed input.
TowerReport parse_analyze(const Json& doc);
FactorDoc parse_factor(const Json& doc);
OrbitDoc parse_orbit(const Json& doc);
PolygonDoc parse_polygon(const Json& doc);
DissectDoc parse_dissect(const Json& doc);

}  // namespace monogen::cli

#endif  // MONOGEN_CLI_REPORT_JSON_HPP_
