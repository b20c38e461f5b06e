#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "bispan/bipartite_graph.hpp"
#include "bispan/trees.hpp"
#include "bispan/verify.hpp"

namespace bispan {

// Every document carries "schema": "1" as its first field. Fields appear in
// a fixed order and reals are printed with 12 significant digits so reports
// diff cleanly.

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// 12 significant digits in fixed notation, trailing zeros dropped.
std::string format_real(double v);

/// Serializes with format_real for every floating value, 2-space indent.
std::string dump_json(const Json& doc);

Json edges_json(const std::vector<Edge>& edges);

/// {"feasible": true, "tree": [[a, b], ...]} or
/// {"feasible": false, "violating_set": [a, ...]}
Json feasibility_json(const FeasibilityResult& result);

Json theorem_report_json(const TheoremReport& report);
Json sweep_report_json(const SweepReport& report);
Json monotonicity_report_json(const MonotonicityReport& report);

void write_summary(std::ostream& out, const TheoremReport& report);
void write_summary(std::ostream& out, const SweepReport& report);
void write_summary(std::ostream& out, const MonotonicityReport& report);

}  // namespace bispan
