#include "edgepoly/graph_io.hpp"

#include <doctest.h>

#include <sstream>

using namespace edgepoly;

namespace {

int error_line(const std::string& text) {
  try {
    parse_edge_list_string(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("edge lists with comments and blank lines") {
  auto g = parse_edge_list_string("# a directed triangle\n\nn 3\n1 2   # first\n2 3\n\n3 1\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.arc_count() == 3);
  CHECK(g.has_arc(3, 1));
  CHECK(describe(g) == "n=3 {(1,2),(2,3),(3,1)}");
}

TEST_CASE("formatting round-trips") {
  auto g = parse_edge_list_string("n 4\n4 1\n1 2\n2 1\n");
  CHECK(parse_edge_list_string(format_edge_list(g)) == g);
  auto isolated = parse_edge_list_string("n 5\n");
  CHECK(isolated.vertex_count() == 5);
  CHECK(isolated.arc_count() == 0);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("n 3\n1 2\n2 2\n") == 3);
  CHECK(error_line("n 3\n1 2\n1 2\n") == 3);
  CHECK(error_line("n 3\n1 4\n") == 2);
  CHECK(error_line("# c\nm 3\n") == 2);
  CHECK(error_line("n 3\n1\n") == 2);
  CHECK(error_line("n 3\n1 x\n") == 2);
  CHECK(error_line("n 0\n") == 1);
  CHECK(error_line("# only a comment\n") == 0);
  CHECK(error_line("") == 0);
  try {
    parse_edge_list_string("n 2\n\n1 1\n");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("line 3: ", 0) == 0);
  }
}
