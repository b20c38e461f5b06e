#pragma once

#include <filesystem>
#include <iosfwd>

#include "bispan/bipartite_graph.hpp"
#include "bispan/degree_demand.hpp"

namespace bispan {

// Graph files are line based:
//
//   # comment
//   p bip <m> <n>
//   e <a> <b>
//
// Indices are 0-based. Readers accept edges in any order and tolerate
// duplicates; writers emit edges sorted lexicographically.
//
// Demand files hold one integer >= 2 per line, one line per A-vertex.
//
// Parse failures throw InputError whose message starts with "line N:".

BipartiteGraph read_graph(std::istream& in);
BipartiteGraph read_graph_file(const std::filesystem::path& path);

void write_graph(std::ostream& out, const BipartiteGraph& g);
void write_graph_file(const std::filesystem::path& path, const BipartiteGraph& g);

DegreeDemand read_demand(std::istream& in);
DegreeDemand read_demand_file(const std::filesystem::path& path);

}  // namespace bispan
