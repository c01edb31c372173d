#pragma once

#include "edgepoly/digraph.hpp"

#include <istream>
#include <stdexcept>
#include <string>

namespace edgepoly {

/// Malformed edge-list input; `line()` is 1-based (0 when the input ended early).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Edge-list text format:
///
///     # comment
///     n 4
///     1 2
///     2 1
///
/// Blank lines and lines starting with '#' are ignored; trailing '#' comments
/// are stripped. Loops, duplicate arcs and out-of-range vertices are errors.
DirectedGraph parse_edge_list(std::istream& in);
DirectedGraph parse_edge_list_string(const std::string& text);

std::string format_edge_list(const DirectedGraph& g);

/// Compact one-line form used in diagnostics, e.g. "n=3 {(1,2),(2,3),(3,1)}".
std::string describe(const DirectedGraph& g);

}  // namespace edgepoly
