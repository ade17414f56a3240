#include <doctest.h>

#include "skelcov/complex.hpp"
#include "skelcov/fixtures.hpp"

using namespace skelcov;

TEST_CASE("tate complex validates") {
  auto c = fixtures::tate();
  CHECK(c.validate().ok());
  CHECK(c.curve("v1").marks.size() == 2);
}

TEST_CASE("duplicate mark labels violate injectivity") {
  auto g = fixtures::c2();
  std::map<std::string, ResidueCurve> curves;
  curves["v1"] = {0, {{"e1", "m"}, {"e2", "m"}}, {}};
  curves["v2"] = {0, {{"e1", "a"}, {"e2", "b"}}, {}};
  MetrizedComplex c(g, curves, 0);
  CHECK(c.validate().has("reduction map not injective"));
}

TEST_CASE("genus mismatch between curve and vertex") {
  auto g = fixtures::c2();
  std::map<std::string, ResidueCurve> curves;
  curves["v1"] = {1, {{"e1", "a"}, {"e2", "b"}}, {}};
  curves["v2"] = {0, {{"e1", "c"}, {"e2", "d"}}, {}};
  MetrizedComplex c(g, curves, 0);
  CHECK(c.validate().has("genus mismatch"));
}

TEST_CASE("marks must cover exactly the incident half-edges") {
  auto g = fixtures::c2();
  std::map<std::string, ResidueCurve> curves;
  curves["v1"] = {0, {{"e1", "a"}}, {}};  // e2 missing
  curves["v2"] = {0, {{"e1", "c"}, {"e2", "d"}, {"e9", "x"}}, {}};
  MetrizedComplex c(g, curves, 0);
  auto report = c.validate();
  CHECK(report.has("mark-missing"));
  CHECK(report.has("mark-extraneous"));
}

TEST_CASE("residue characteristic must be zero or prime") {
  auto g = fixtures::c2();
  MetrizedComplex c4(canonical_complex(g, 4).graph(), canonical_complex(g, 4).curves(), 4);
  CHECK(c4.validate().has("residue-char-invalid"));
  CHECK(canonical_complex(g, 5).validate().ok());
  CHECK(canonical_complex(g, 0).validate().ok());
}

TEST_CASE("subcomplex of the full selection is the identity") {
  auto c = fixtures::tate();
  auto full = c.subcomplex(c.full_selection());
  CHECK(full == c);
}

TEST_CASE("single vertex subcomplex") {
  auto c = fixtures::tate();
  SubcomplexSelection s;
  s.vertices.insert("v1");
  auto sub = c.subcomplex(s);
  CHECK(sub.graph().vertices().size() == 1);
  CHECK(sub.graph().finite_edges().empty());
  CHECK(sub.validate().ok());
  CHECK(sub.curve("v1").marks.empty());
}

TEST_CASE("non-closed selection is an error") {
  auto c = fixtures::tate();
  SubcomplexSelection s;
  s.vertices.insert("v1");
  s.edges.insert("e1");
  CHECK_THROWS_AS(c.subcomplex(s), std::invalid_argument);
}

TEST_CASE("subcomplex is idempotent") {
  auto c = fixtures::genus2();
  SubcomplexSelection s;
  s.vertices = {"v1", "v2"};
  s.edges = {"e1"};
  auto once = c.subcomplex(s);
  auto twice = once.subcomplex(s);
  CHECK(once == twice);
}

TEST_CASE("mu2 preset has two entries with residue 1 corrections") {
  ResidueCurve curve{0, {{"e1", "m0"}, {"e2", "m_inf"}}, {}};
  auto table = mu2_table(curve);
  REQUIRE(table.size() == 2);
  CHECK(table[0].is_identity());
  CHECK(table[1].corrections.at("e1") == 1);
  CHECK(table[1].corrections.at("e2") == 1);
  CHECK(table[1].mark_images.at("m0") == "m0");
}

TEST_CASE("omitted automorphism tables default to identity only") {
  auto c = fixtures::tate();
  REQUIRE(c.curve("v1").automorphism_table.size() == 1);
  CHECK(c.curve("v1").automorphism_table.front().is_identity());
}
