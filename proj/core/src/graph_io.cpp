#include "bispan/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bispan/errors.hpp"

namespace bispan {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view tok, std::size_t line, const char* what) {
  T value{};
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    fail(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
  return value;
}

bool is_skippable(const std::vector<std::string_view>& toks) {
  return toks.empty() || toks.front().starts_with('#');
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

}  // namespace

BipartiteGraph read_graph(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<Edge> edges;

  while (std::getline(in, text)) {
    ++line_no;
    const auto toks = split_ws(text);
    if (is_skippable(toks)) continue;
    if (toks[0] == "p") {
      if (have_header) fail(line_no, "duplicate 'p' header");
      if (toks.size() != 4 || toks[1] != "bip") fail(line_no, "expected 'p bip <m> <n>'");
      m = parse_number<std::size_t>(toks[2], line_no, "side size m");
      n = parse_number<std::size_t>(toks[3], line_no, "side size n");
      if (m == 0 || n == 0) fail(line_no, "both sides must be nonempty");
      have_header = true;
    } else if (toks[0] == "e") {
      if (!have_header) fail(line_no, "edge before 'p bip' header");
      if (toks.size() != 3) fail(line_no, "expected 'e <a> <b>'");
      const auto a = parse_number<std::size_t>(toks[1], line_no, "A index");
      const auto b = parse_number<std::size_t>(toks[2], line_no, "B index");
      if (a >= m) fail(line_no, "A index " + std::to_string(a) + " out of range [0, " + std::to_string(m) + ")");
      if (b >= n) fail(line_no, "B index " + std::to_string(b) + " out of range [0, " + std::to_string(n) + ")");
      edges.push_back({a, b});
    } else {
      fail(line_no, "unknown record '" + std::string(toks[0]) + "'");
    }
  }
  if (!have_header) fail(line_no + 1, "missing 'p bip <m> <n>' header");
  return BipartiteGraph::from_edge_list(m, n, edges);
}

BipartiteGraph read_graph_file(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const BipartiteGraph& g) {
  out << "p bip " << g.left_size() << ' ' << g.right_size() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.a << ' ' << e.b << '\n';
}

void write_graph_file(const std::filesystem::path& path, const BipartiteGraph& g) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  write_graph(out, g);
}

DegreeDemand read_demand(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;
  std::vector<int> values;
  while (std::getline(in, text)) {
    ++line_no;
    const auto toks = split_ws(text);
    if (is_skippable(toks)) continue;
    if (toks.size() != 1) fail(line_no, "expected a single integer");
    const int v = parse_number<int>(toks[0], line_no, "integer demand");
    if (v < 2) fail(line_no, "demand " + std::to_string(v) + " is below 2");
    values.push_back(v);
  }
  if (values.empty()) fail(line_no + 1, "demand file has no entries");
  return DegreeDemand(std::move(values));
}

DegreeDemand read_demand_file(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_demand(in);
}

}  // namespace bispan
