#include <doctest.h>

#include <numeric>

#include "skelcov/fixtures.hpp"
#include "skelcov/galois.hpp"

using namespace skelcov;

namespace {

// oracle for closure minimality: does any Galois covering of degree m < bound
// dominate the given action? Domination = an equivariant surjection onto the
// fixture's sheet action from a regular transitive action.
bool dominated_by_smaller_galois(const std::vector<Perm>& action, int degree,
                                 int bound) {
  int r = static_cast<int>(action.size());
  for (int m = 2; m < bound; ++m) {
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Perm> sym;
    do {
      sym.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    // enumerate r-tuples in S_m
    std::vector<std::size_t> index(r, 0);
    while (true) {
      std::vector<Perm> candidate;
      for (int i = 0; i < r; ++i) candidate.push_back(sym[index[i]]);
      PermGroup g = PermGroup::generated(candidate, m, 100000);
      if (g.is_transitive() && g.order() == static_cast<unsigned long long>(m)) {
        // regular transitive: try every equivariant map {1..m} -> {1..degree}
        std::vector<int> q(m, 0);
        while (true) {
          bool equivariant = true;
          for (int i = 0; i < r && equivariant; ++i)
            for (int x = 0; x < m && equivariant; ++x)
              if (q[candidate[i].apply(x)] != action[i].apply(q[x]))
                equivariant = false;
          if (equivariant) {
            std::vector<bool> hit(degree, false);
            for (int x = 0; x < m; ++x) hit[q[x]] = true;
            bool onto = true;
            for (bool h : hit) onto = onto && h;
            if (onto) return true;
          }
          int pos = m - 1;
          while (pos >= 0 && ++q[pos] == degree) q[pos--] = 0;
          if (pos < 0) break;
        }
      }
      int pos = r - 1;
      while (pos >= 0 && ++index[pos] == sym.size()) index[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("monodromy of the double cover") {
  auto m = monodromy_group(fixtures::split_double_cover());
  CHECK(m.degree == 2);
  CHECK(m.order == 2);
  CHECK(m.transitive);
  CHECK(is_galois(fixtures::split_double_cover()));
}

TEST_CASE("monodromy of the s3 fixture") {
  auto m = monodromy_group(fixtures::s3_cover());
  CHECK(m.degree == 3);
  CHECK(m.order == 6);
  CHECK(m.transitive);
  CHECK_FALSE(is_galois(fixtures::s3_cover()));
}

TEST_CASE("identity covering is galois with trivial monodromy") {
  CoveringRep identity(fixtures::c2(), 1, {});
  auto m = monodromy_group(identity);
  CHECK(m.order == 1);
  CHECK(is_galois(identity));
}

TEST_CASE("is_galois rejects disconnected coverings") {
  CHECK_THROWS_AS(is_galois(fixtures::trivial_double_cover()), std::domain_error);
}

TEST_CASE("galois closure of the s3 fixture has degree 6") {
  auto closure = galois_closure(fixtures::s3_cover());
  CHECK(closure.closure.degree() == 6);
  CHECK(closure.group_order == 6);
  CHECK(closure.stabilizer_order == 2);
  CHECK(is_galois(closure.closure));
  CHECK(isomorphic_coverings(closure.quotient_by_stabilizer, fixtures::s3_cover()));
}

TEST_CASE("closure minimality for the s3 fixture by exhaustion") {
  auto action = fixtures::s3_cover().monodromy_generators();
  CHECK_FALSE(dominated_by_smaller_galois(action, 3, 6));
}

TEST_CASE("galois coverings are their own closures") {
  auto closure = galois_closure(fixtures::split_double_cover());
  CHECK(closure.closure.degree() == 2);
  CHECK(closure.stabilizer_order == 1);
  CHECK(isomorphic_coverings(closure.closure, fixtures::split_double_cover()));

  auto cyclic = galois_closure(fixtures::cyclic_triple_cover());
  CHECK(cyclic.closure.degree() == 3);
  CHECK(is_galois(cyclic.closure));
  CHECK(isomorphic_coverings(cyclic.closure, fixtures::cyclic_triple_cover()));
}

TEST_CASE("quotient by the full deck group is the identity covering") {
  auto rep = fixtures::split_double_cover();
  CoveringRep quotiented = quotient(rep, {Perm::from_cycles("(1 2)", 2)});
  CHECK(quotiented.degree() == 1);
}

TEST_CASE("quotients of a klein four cover are double covers") {
  CoveringRep rep(fixtures::theta2(), 4,
                  {{"e2", Perm::from_cycles("(1 2)(3 4)", 4)},
                   {"e3", Perm::from_cycles("(1 3)(2 4)", 4)}});
  CHECK(is_galois(rep));
  CoveringRep half = quotient(rep, {Perm::from_cycles("(1 2)(3 4)", 4)});
  CHECK(half.degree() == 2);
  CHECK(half.is_connected_cover());
  CHECK(is_galois(half));
}

TEST_CASE("quotient rejects non-deck permutations") {
  CHECK_THROWS_AS(
      quotient(fixtures::cyclic_triple_cover(), {Perm::from_cycles("(1 2)", 3)}),
      std::invalid_argument);
}

TEST_CASE("quotients of totally split galois covers stay totally split") {
  // finite-level consequence of normality: deck quotients of a voltage cover
  // are voltage covers, hence totally split
  CoveringRep rep(fixtures::c2(), 4, {{"e2", Perm::from_cycles("(1 2 3 4)", 4)}});
  REQUIRE(is_galois(rep));
  CoveringRep half = quotient(rep, {Perm::from_cycles("(1 3)(2 4)", 4)});
  auto material = voltage_to_covering(half);
  CHECK(check_totally_split(material.morphism, material.morphism.target().full_selection()));
}

TEST_CASE("closure graph of the s3 fixture is a hexagon") {
  auto rep = fixtures::s3_cover();
  auto closure = galois_closure(rep);
  auto graph = closure_graph(rep, closure);
  // S3 acts with point stabilizers of order 2 at both vertices: 3 + 3
  // vertices, 6 edge sheets, connected with first Betti number 1
  CHECK(graph.vertices().size() == 6);
  CHECK(graph.finite_edges().size() == 6);
  CHECK(graph.is_connected());
  CHECK(graph.first_betti() == 1);
  CHECK(graph.validate().ok());
}

TEST_CASE("closure graph of a voltage covering is the voltage covering graph") {
  auto rep = fixtures::cyclic_triple_cover();
  auto closure = galois_closure(rep);
  auto graph = closure_graph(rep, closure);
  auto direct = voltage_to_covering(closure.closure).covering;
  CHECK(graph.vertices().size() == direct.vertices().size());
  CHECK(graph.finite_edges().size() == direct.finite_edges().size());
  CHECK(graph.first_betti() == direct.first_betti());
}

TEST_CASE("classification of abelian covers") {
  auto tate = classify_abelian_covers(fixtures::tate(), 2);
  CHECK(tate.totally_split == 2);
  CHECK(tate.etale_not_split == 0);
  CHECK(tate.ramified == 2);

  auto genus2 = classify_abelian_covers(fixtures::genus2(), 2);
  CHECK(genus2.totally_split == 2);
  CHECK(genus2.etale_not_split == 6);
  CHECK(genus2.ramified == 8);

  auto tree = classify_abelian_covers(canonical_complex(fixtures::segment(), 0), 3);
  CHECK(tree.totally_split == 1);
  CHECK(tree.etale_not_split == 0);
  CHECK(tree.ramified == 0);

  // strata sizes sum to the full torsion count
  CHECK(genus2.totally_split + genus2.etale_not_split + genus2.ramified ==
        genus2.filtration.total);
}

TEST_CASE("group order bound raises a resource error") {
  Bounds tiny;
  tiny.group_order = 2;
  CHECK_THROWS_AS(monodromy_group(fixtures::s3_cover(), tiny), ResourceError);
}
