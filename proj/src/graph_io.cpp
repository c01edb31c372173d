#include "edgepoly/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace edgepoly {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string f; ss >> f;) out.push_back(f);
  return out;
}

int parse_int(const std::string& s, int line) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(line, "expected an integer, got '" + s + "'");
  return v;
}

}  // namespace

DirectedGraph parse_edge_list(std::istream& in) {
  std::optional<int> n;
  std::vector<Arc> arcs;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (!n) {
      if (fields.size() != 2 || fields[0] != "n")
        throw ParseError(lineno, "expected header 'n <count>'");
      int count = parse_int(fields[1], lineno);
      if (count < 1 || count > DirectedGraph::kMaxVertices)
        throw ParseError(lineno, "vertex count must be in 1.." +
                                     std::to_string(DirectedGraph::kMaxVertices));
      n = count;
      continue;
    }
    if (fields.size() != 2) throw ParseError(lineno, "expected an arc 'i j'");
    Arc a{parse_int(fields[0], lineno), parse_int(fields[1], lineno)};
    if (a.tail < 1 || a.tail > *n || a.head < 1 || a.head > *n)
      throw ParseError(lineno, "arc " + to_string(a) + " has an endpoint outside 1.." +
                                   std::to_string(*n));
    if (a.tail == a.head) throw ParseError(lineno, "loop " + to_string(a) + " is not allowed");
    for (const auto& b : arcs)
      if (b == a) throw ParseError(lineno, "duplicate arc " + to_string(a));
    arcs.push_back(a);
  }
  if (!n) throw ParseError(0, "missing header 'n <count>'");
  return DirectedGraph(*n, arcs);
}

DirectedGraph parse_edge_list_string(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::string format_edge_list(const DirectedGraph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  for (const auto& a : g.arcs()) out << a.tail << " " << a.head << "\n";
  return out.str();
}

std::string describe(const DirectedGraph& g) {
  std::string s = "n=" + std::to_string(g.vertex_count()) + " {";
  for (std::size_t i = 0; i < g.arcs().size(); ++i) {
    if (i) s += ",";
    s += to_string(g.arcs()[i]);
  }
  return s + "}";
}

}  // namespace edgepoly
