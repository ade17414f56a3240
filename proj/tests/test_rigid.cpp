#include <doctest.h>

#include <set>

#include "skelcov/coverenum.hpp"
#include "skelcov/fixtures.hpp"
#include "skelcov/rigid.hpp"

using namespace skelcov;

namespace {

// Tate cover with every stored edge orientation flipped; same covering, so
// the classification must be identical under the new trivialization.
HarmonicMorphism flipped_tate_cover() {
  auto phi = fixtures::tate_cover();
  std::vector<Edge> es;
  for (const auto& e : phi.source().graph().finite_edges())
    es.push_back({e.id, e.to, e.from, e.length});
  AugmentedMetricGraph sg(phi.source().graph().vertices(), es);
  MetrizedComplex source = canonical_complex(sg, 0);
  std::map<std::string, ResidueCurve> curves = source.curves();
  for (auto& [vid, curve] : curves) curve.automorphism_table = mu2_table(curve);
  source = MetrizedComplex(sg, std::move(curves), 0);
  return HarmonicMorphism(source, phi.target(), phi.vertex_map(), phi.edge_map(),
                          phi.dilations(), phi.vertex_degrees());
}

ComplexAutomorphism tate_automorphism(const HarmonicMorphism& phi, int at_v1, int at_v2) {
  ComplexAutomorphism a = identity_automorphism(phi);
  a.table_choice["v1'"] = at_v1;
  a.table_choice["v2'"] = at_v2;
  return a;
}

}  // namespace

TEST_CASE("gluing data counts multiply the dilations") {
  CHECK(gluing_data_count(fixtures::tate_cover()) == 4);
  auto split = voltage_to_covering(fixtures::split_double_cover()).morphism;
  CHECK(gluing_data_count(split) == 1);

  // single edge of dilation 3
  AugmentedMetricGraph base_g({{"a", 0}, {"b", 0}}, {{"e", "a", "b", Rational(3)}});
  AugmentedMetricGraph src_g({{"a'", 0}, {"b'", 0}}, {{"e'", "a'", "b'", Rational(1)}});
  HarmonicMorphism phi(canonical_complex(src_g, 0), canonical_complex(base_g, 0),
                       {{"a'", "a"}, {"b'", "b"}}, {{"e'", "e"}}, {{"e'", 3}},
                       {{"a'", 3}, {"b'", 3}});
  CHECK(phi.validate().ok());
  CHECK(gluing_data_count(phi) == 3);

  SUBCASE("three classes of size one without automorphisms") {
    auto lifting = lifting_classes(phi);
    CHECK(lifting.gluing_total == 3);
    CHECK(lifting.automorphism_order == 1);
    REQUIRE(lifting.classes.size() == 3);
    for (const auto& lc : lifting.classes) {
      CHECK(lc.orbit_size == 1);
      CHECK(lc.stabilizer_order == 1);
    }
  }
}

TEST_CASE("the tate cover automorphism group has order four") {
  auto phi = fixtures::tate_cover();
  auto auts = automorphism_group(phi);
  CHECK(auts.size() == 4);
  // all four combinations of table entries, identity graph part
  std::set<std::pair<int, int>> seen;
  for (const auto& a : auts) {
    CHECK(a.vertex_images.at("v1'") == "v1'");
    CHECK(a.edge_images.at("e1'") == "e1'");
    seen.insert({a.table_choice.at("v1'"), a.table_choice.at("v2'")});
  }
  CHECK(seen.size() == 4);
}

TEST_CASE("identity covering has a trivial automorphism group") {
  auto id = HarmonicMorphism::identity(fixtures::tate());
  CHECK(automorphism_group(id).size() == 1);
}

TEST_CASE("the split double cover has deck group of order two") {
  auto split = voltage_to_covering(fixtures::split_double_cover()).morphism;
  auto auts = automorphism_group(split);
  CHECK(auts.size() == 2);
}

TEST_CASE("conjugation action on the tate cover") {
  auto phi = fixtures::tate_cover();
  GluingAssignment zero = trivial_gluing(phi);

  SUBCASE("identity acts trivially") {
    auto id = identity_automorphism(phi);
    CHECK(conjugation_action(phi, id, zero) == zero);
  }
  SUBCASE("(-1, +1) shifts both edges by one") {
    auto alpha = tate_automorphism(phi, 1, 0);
    GluingAssignment moved = conjugation_action(phi, alpha, zero);
    CHECK(moved.residues.at("e1'") == 1);
    CHECK(moved.residues.at("e2'") == 1);
  }
  SUBCASE("(-1, -1) fixes everything") {
    auto alpha = tate_automorphism(phi, 1, 1);
    CHECK(conjugation_action(phi, alpha, zero) == zero);
    GluingAssignment mixed;
    mixed.residues = {{"e1'", 1}, {"e2'", 0}};
    CHECK(conjugation_action(phi, alpha, mixed) == mixed);
  }
}

TEST_CASE("conjugation is a group action") {
  auto phi = fixtures::tate_cover();
  auto auts = automorphism_group(phi);
  std::vector<GluingAssignment> all;
  for (long long a = 0; a < 2; ++a)
    for (long long b = 0; b < 2; ++b) {
      GluingAssignment g;
      g.residues = {{"e1'", a}, {"e2'", b}};
      all.push_back(g);
    }
  auto id = identity_automorphism(phi);
  for (const auto& theta : all) CHECK(conjugation_action(phi, id, theta) == theta);
  for (const auto& alpha : auts)
    for (const auto& beta : auts) {
      ComplexAutomorphism both = compose(phi, alpha, beta);
      for (const auto& theta : all)
        CHECK(conjugation_action(phi, alpha, conjugation_action(phi, beta, theta)) ==
              conjugation_action(phi, both, theta));
    }
}

TEST_CASE("lifting classes of the tate cover match the classification theorem") {
  auto lifting = lifting_classes(fixtures::tate_cover());
  CHECK(lifting.gluing_total == 4);
  CHECK(lifting.automorphism_order == 4);
  REQUIRE(lifting.classes.size() == 2);
  unsigned long long orbit_sum = 0;
  for (const auto& lc : lifting.classes) {
    CHECK(lc.orbit_size == 2);
    CHECK(lc.stabilizer_order == 2);
    orbit_sum += lc.orbit_size;
  }
  CHECK(orbit_sum == lifting.gluing_total);
}

TEST_CASE("totally split covers have a single lifting class") {
  auto split = voltage_to_covering(fixtures::split_double_cover()).morphism;
  auto lifting = lifting_classes(split);
  CHECK(lifting.gluing_total == 1);
  REQUIRE(lifting.classes.size() == 1);
  CHECK(lifting.classes.front().orbit_size == 1);
}

TEST_CASE("classification is invariant under flipped trivializations") {
  auto a = lifting_classes(fixtures::tate_cover());
  auto b = lifting_classes(flipped_tate_cover());
  CHECK(a.gluing_total == b.gluing_total);
  CHECK(a.automorphism_order == b.automorphism_order);
  REQUIRE(a.classes.size() == b.classes.size());
  std::multiset<std::pair<unsigned long long, unsigned long long>> sa, sb;
  for (const auto& lc : a.classes) sa.insert({lc.orbit_size, lc.stabilizer_order});
  for (const auto& lc : b.classes) sb.insert({lc.orbit_size, lc.stabilizer_order});
  CHECK(sa == sb);
}

TEST_CASE("resource bounds on the gluing set") {
  Bounds tiny;
  tiny.gluing_total = 2;
  CHECK_THROWS_AS(lifting_classes(fixtures::tate_cover(), tiny), ResourceError);
}

TEST_CASE("rigidified morphism checks on the tate cover") {
  auto phi = fixtures::tate_cover();
  GluingAssignment zero = trivial_gluing(phi);
  GluingAssignment other;  // in the other orbit: {(0,1), (1,0)}
  other.residues = {{"e1'", 1}, {"e2'", 0}};

  RigidMorphism identity_psi{HarmonicMorphism::identity(phi.source()), {}};

  SUBCASE("identity relates equal gluing data") {
    CHECK(rigidified_morphism_check(identity_psi, phi, zero, phi, zero));
    CHECK(rigidified_morphism_check(identity_psi, phi, other, phi, other));
  }
  SUBCASE("identity does not relate different orbits") {
    CHECK_FALSE(rigidified_morphism_check(identity_psi, phi, zero, phi, other));
  }
  SUBCASE("an automorphism relates gluing data to its conjugate") {
    auto auts = automorphism_group(phi);
    for (const auto& alpha : auts) {
      RigidMorphism psi{HarmonicMorphism::identity(phi.source()), {}};
      for (const auto& [v, t] : alpha.table_choice) {
        const auto& entry = phi.source().curve(v).automorphism_table.at(t);
        for (const auto& [edge, c] : entry.corrections) psi.corrections[v][edge] = c;
      }
      // graph parts of the tate automorphisms are trivial, so psi = alpha and
      // it carries theta to the conjugate (the action is involutive here)
      GluingAssignment image = conjugation_action(phi, alpha, zero);
      CHECK(rigidified_morphism_check(psi, phi, zero, phi, image));
    }
  }
  SUBCASE("triangle failure throws") {
    auto split = voltage_to_covering(fixtures::split_double_cover()).morphism;
    RigidMorphism wrong{HarmonicMorphism::identity(split.source()), {}};
    CHECK_THROWS_AS(
        rigidified_morphism_check(wrong, split, trivial_gluing(split), phi, zero),
        std::invalid_argument);
  }
}

TEST_CASE("burnside identity holds on a cover with a moving graph part") {
  // the split double cover: deck group Z/2 swaps the two sheets and all
  // dilations are 1, so the gluing set is a single trivial point
  auto split = voltage_to_covering(fixtures::split_double_cover()).morphism;
  auto lifting = lifting_classes(split);
  CHECK(lifting.classes.size() * lifting.automorphism_order == 2);
}

TEST_CASE("gluing normalization validates keys and reduces residues") {
  auto phi = fixtures::tate_cover();
  GluingAssignment g;
  g.residues = {{"e1'", 5}, {"e2'", -1}};
  auto normal = normalize_gluing(phi, g);
  CHECK(normal.residues.at("e1'") == 1);
  CHECK(normal.residues.at("e2'") == 1);
  GluingAssignment missing;
  missing.residues = {{"e1'", 0}};
  CHECK_THROWS_AS(normalize_gluing(phi, missing), std::invalid_argument);
}
