#include "edgepoly/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace edgepoly;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "edgepoly");
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

const char* kTriangle = "n 3\n1 2\n2 3\n3 1\n";
const char* kSquare = "n 4\n1 2\n2 1\n2 3\n3 2\n3 4\n4 3\n4 1\n1 4\n";

}  // namespace

TEST_CASE("classify exit codes and output") {
  auto tri = run({"classify"}, kTriangle);
  CHECK(tri.code == kRigid);
  CHECK(contains(tri.out, "fano: yes"));
  CHECK(contains(tri.out, "rigid: yes"));

  auto sq = run({"classify", "--oracle"}, kSquare);
  CHECK(sq.code == kNotCertified);
  CHECK(contains(sq.out, "witness: C1 on (i1,i2,i3,i4) = (1,2,3,4)"));

  auto bad = run({"classify"}, "n 4\n1 2\n2 3\n3 1\n1 4\n");
  CHECK(bad.code == kNotFano);
  CHECK(contains(bad.out, "not Fano: arc (1,4) on no directed cycle"));

  auto garbage = run({"classify"}, "n 2\n1 1\n");
  CHECK(garbage.code == kInputError);
  CHECK(contains(garbage.err, "line 2"));
  CHECK(run({"classify", "/nonexistent/graph.txt"}).code == kInputError);
  CHECK(run({"classify"}, "n 3\n").code == kInputError);
  CHECK(run({"nonsense"}).code == kInputError);

  auto js = run({"classify", "--json"}, kSquare);
  auto j = nlohmann::json::parse(js.out);
  CHECK(j["rigid"] == false);
  CHECK(j["dim"] == 3);
}

TEST_CASE("faces") {
  auto edges = run({"faces", "--dim", "1"}, kTriangle);
  CHECK(edges.code == 0);
  CHECK(contains(edges.out, "3 faces of dimension 1"));
  auto squares = run({"faces", "--dim", "2"}, kSquare);
  CHECK(contains(squares.out, "[square]"));
  auto none = run({"faces", "--dim", "2"}, kTriangle);
  CHECK(none.code == 0);
  CHECK(contains(none.err, "warning"));
}

TEST_CASE("census") {
  auto c = run({"census", "--max-n", "3"});
  REQUIRE(c.code == 0);
  std::istringstream lines(c.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,arcs,dim,fano,smooth,rigid,square2faces");
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(contains(line, ",1,0"));  // rigid, no square 2-faces
  }
  CHECK(rows > 0);
  CHECK(run({"census", "--max-n", "7"}).code != 0);
}

TEST_CASE("hyperplane") {
  const std::string completed = "n 5\n1 2\n1 4\n3 2\n3 4\n2 5\n4 5\n5 1\n5 3\n";
  auto ok = run({"hyperplane", "--cycle", "1-2,3-2,3-4,1-4"}, completed);
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "a = (1, 0, 1, 0"));
  CHECK(contains(ok.out, "postcondition"));

  auto tri = run({"hyperplane", "--cycle", "1-2,2-3,3-1"}, kTriangle);
  CHECK(tri.code == 1);
  CHECK(contains(tri.err, "not homogeneous"));

  auto chord = run({"hyperplane", "--cycle", "1-2,2-3,4-3,1-4"}, "n 5\n1 2\n2 3\n1 4\n4 3\n1 3\n3 5\n5 1\n");
  CHECK(chord.code == 1);
  CHECK(contains(chord.err, "error: mu-dist violated at (1,3)"));

  CHECK(run({"hyperplane", "--cycle", "1-3"}, kTriangle).code == kInputError);
  CHECK(run({"hyperplane", "--cycle", "x"}, kTriangle).code == kInputError);
}

TEST_CASE("verify is deterministic") {
  auto a = run({"verify", "--max-n", "3"});
  auto b = run({"verify", "--max-n", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "verify: PASS"));
  auto mut = run({"verify", "--max-n", "4", "--rescue-policy", "unrestricted"});
  CHECK(mut.code == 1);
  CHECK(contains(mut.out, "verify: FAIL"));
  CHECK(run({"verify", "--max-n", "9"}).code != 0);
}
