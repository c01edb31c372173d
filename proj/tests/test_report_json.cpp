#include "edgepoly/report_json.hpp"

#include <doctest.h>

#include "helpers.hpp"

using namespace edgepoly;
using testing::graph;

TEST_CASE("witness encoding") {
  auto c1 = witness_to_json(C1Witness{{1, 2, 3, 4}});
  CHECK(c1["kind"] == "C1");
  CHECK(c1["vertices"] == nlohmann::json::array({1, 2, 3, 4}));
  CHECK_FALSE(c1.contains("rescue"));
  CHECK(witness_to_json(C2Witness{{1, 2, 3, 4}, NoRescue{}})["rescue"] == "none");
  CHECK(witness_to_json(C2Witness{{1, 2, 3, 4}, EdgeRescue{}})["rescue"] == "edge");
  CHECK(witness_to_json(C2Witness{{1, 2, 3, 4}, VertexRescue{5}})["rescue"]["vertex"] == 5);
  for (const Witness& w : {Witness{C1Witness{{2, 1, 4, 3}}}, Witness{C2Witness{{1, 2, 3, 4}, VertexRescue{6}}}})
    CHECK(witness_from_json(witness_to_json(w)) == w);
  CHECK_THROWS_AS(witness_from_json(nlohmann::json{{"kind", "C3"}, {"vertices", {1, 2, 3, 4}}}),
                  nlohmann::json::exception);
}

TEST_CASE("reports round-trip") {
  for (const auto& g : {testing::three_cycle(), testing::symmetric_square(),
                        graph(6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 4}, {5, 6}, {6, 5}}),
                        graph(4, {{1, 2}, {2, 3}, {3, 1}, {1, 4}})}) {
    auto r = full_report(g);
    auto j = report_to_json(r);
    CHECK(report_from_json(j) == r);
    CHECK(report_from_json(nlohmann::json::parse(j.dump())) == r);
  }
  auto j = report_to_json(full_report(testing::symmetric_square()));
  CHECK(j["rigid"] == false);
  CHECK(j["witness"]["kind"] == "C1");
  CHECK(report_to_json(full_report(testing::three_cycle()))["witness"].is_null());
}

TEST_CASE("polytope dump") {
  auto j = polytope_to_json(testing::polytope({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(j["ambient_dim"] == 2);
  CHECK(j["dim"] == 2);
  CHECK(j["vertices"].size() == 3);
  REQUIRE(j["facets"].size() == 3);
  for (const auto& f : j["facets"]) {
    CHECK(f["normal"].size() == 2);
    CHECK(f.contains("rhs"));
  }
  CHECK(std::is_sorted(j["facets"].begin(), j["facets"].end()));
}
