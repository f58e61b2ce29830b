#pragma once

#include <string>

#include "gyro/graph_analysis.hpp"
#include "gyro/gyrogroup.hpp"
#include "gyro/multigraph.hpp"

namespace gyro {

// Table file schema:
//   {"name": str, "order": n, "identity": int, "labels": [str]*n,
//    "table": [[int]*n]*n}
// Parsing validates the table; a failing table raises structure_error unless
// allow_errata is set.  Output is canonical: fixed key order, 2-space
// indent, so dump(parse(dump(g))) == dump(g).
std::string table_to_json(const GyroGroup& g);
GyroGroup table_from_json(const std::string& text, bool allow_errata = false);

// Runs the validator on the raw parsed table without constructing a
// GyroGroup, so even tables with out-of-range entries get a report.
ValidationReport validate_table_json(const std::string& text);

// Graph schema:
//   {"kind": "ggraph|lcayley|rcayley|line",
//    "vertices": [{"id", "level", "orbit"} | {"id", "element"}],
//    "edges": [{"u","v","p"}], "warnings": [str]}
std::string graph_to_json(const MultiGraph& graph);
MultiGraph graph_from_json(const std::string& text);

// DOT text; a p-edge renders as p parallel edge lines.  G-graph vertices are
// named "L<level>_<anchor>", Cayley vertices by element label, line-graph
// vertices "e<source-edge-id>".
std::string emit_dot(const MultiGraph& graph);

// Plain-text rendering of a validation report / analysis report.
std::string report_to_json(const ValidationReport& report);
std::string analysis_to_json(const AnalysisReport& report);

}  // namespace gyro
