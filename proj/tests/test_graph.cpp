#include <doctest.h>

#include "skelcov/fixtures.hpp"
#include "skelcov/graph.hpp"

using namespace skelcov;

TEST_CASE("single vertex no edges is valid") {
  AugmentedMetricGraph g({{"v1", 0}}, {});
  CHECK(g.validate().ok());
  CHECK(g.first_betti() == 0);
  CHECK(g.total_genus() == 0);
}

TEST_CASE("zero length edge is a violation") {
  AugmentedMetricGraph g({{"v1", 0}, {"v2", 0}}, {{"e1", "v1", "v2", Rational(0)}});
  auto report = g.validate();
  CHECK_FALSE(report.ok());
  CHECK(report.has("non-positive length"));
}

TEST_CASE("loops and dangling references are violations") {
  AugmentedMetricGraph loop({{"v1", 0}}, {{"e1", "v1", "v1", Rational(1)}});
  CHECK(loop.validate().has("loop-edge"));
  AugmentedMetricGraph dangling({{"v1", 0}}, {{"e1", "v1", "v9", Rational(1)}});
  CHECK(dangling.validate().has("dangling-edge"));
}

TEST_CASE("c2 is valid with betti 1") {
  auto g = fixtures::c2();
  CHECK(g.validate().ok());
  CHECK(g.first_betti() == 1);
  CHECK(g.total_genus() == 1);
}

TEST_CASE("theta2 has betti 2") {
  CHECK(fixtures::theta2().first_betti() == 2);
}

TEST_CASE("trees have betti 0") {
  AugmentedMetricGraph path({{"a", 0}, {"b", 0}, {"c", 0}},
                            {{"e1", "a", "b", Rational(1)},
                             {"e2", "b", "c", Rational(2)}});
  CHECK(path.first_betti() == 0);
}

TEST_CASE("total genus adds vertex genera to betti") {
  AugmentedMetricGraph g({{"v1", 0}, {"v2", 1}},
                         {{"e1", "v1", "v2", Rational(1)},
                          {"e2", "v1", "v2", Rational(1)}});
  CHECK(g.total_genus() == 2);
  AugmentedMetricGraph lone({{"v1", 3}}, {});
  CHECK(lone.total_genus() == 3);
}

TEST_CASE("total genus rejects disconnected input") {
  AugmentedMetricGraph two({{"a", 0}, {"b", 0}}, {});
  CHECK_THROWS_AS(two.total_genus(), std::domain_error);
}

TEST_CASE("connected components") {
  auto none = AugmentedMetricGraph({}, {}).connected_components();
  CHECK(none.empty());
  CHECK(fixtures::c2().connected_components().size() == 1);

  AugmentedMetricGraph two_c2({{"a1", 0}, {"a2", 0}, {"b1", 0}, {"b2", 0}},
                              {{"e1", "a1", "a2", Rational(1)},
                               {"e2", "a1", "a2", Rational(1)},
                               {"f1", "b1", "b2", Rational(1)},
                               {"f2", "b1", "b2", Rational(1)}},
                              {{"P", "b1"}});
  auto components = two_c2.connected_components();
  REQUIRE(components.size() == 2);
  CHECK(components[0].vertices().front().id == "a1");
  CHECK(components[1].leaf_edges().size() == 1);

  // betti is additive over components
  int total = 0;
  for (const auto& c : components) total += c.first_betti();
  CHECK(total == two_c2.first_betti());
}

TEST_CASE("non essential vertices are flagged") {
  AugmentedMetricGraph g({{"a", 0}, {"b", 0}, {"c", 1}},
                         {{"e1", "a", "b", Rational(1)},
                          {"e2", "b", "c", Rational(1)},
                          {"e3", "c", "a", Rational(1)}});
  auto flagged = g.non_essential_vertices();
  REQUIRE(flagged.size() == 2);  // a and b; c has genus 1
  CHECK(flagged[0] == "a");
  CHECK(flagged[1] == "b");
}

TEST_CASE("subdivision preserves betti and total length") {
  auto g = fixtures::c2();
  auto h = g.subdivide("e1", Rational(1, 3), "m");
  CHECK(h.validate().ok());
  CHECK(h.first_betti() == g.first_betti());
  CHECK(h.vertices().size() == 3);
  CHECK(h.edge("e1.a").length + h.edge("e1.b").length == g.edge("e1").length);
  CHECK_THROWS_AS(g.subdivide("e1", Rational(2), "m"), std::invalid_argument);
  CHECK_THROWS_AS(g.subdivide("e1", Rational(1, 2), "v1"), std::invalid_argument);
}

TEST_CASE("spanning forest is deterministic") {
  auto g = fixtures::theta2();
  auto tree = spanning_forest(g);
  REQUIRE(tree.size() == 1);
  CHECK(tree[0] == "e1");  // BFS from the smallest vertex id, input edge order
}

TEST_CASE("leaves do not change betti") {
  AugmentedMetricGraph g({{"v1", 0}, {"v2", 0}},
                         {{"e1", "v1", "v2", Rational(1)},
                          {"e2", "v1", "v2", Rational(1)}},
                         {{"P1", "v1"}, {"P2", "v2"}});
  CHECK(g.first_betti() == 1);
  CHECK(g.valence("v1") == 3);
}
