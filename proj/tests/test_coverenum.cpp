#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "skelcov/coverenum.hpp"
#include "skelcov/fixtures.hpp"
#include "skelcov/galois.hpp"
#include "skelcov/snf.hpp"

using namespace skelcov;

namespace {

std::vector<Perm> all_perms(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// oracle: number of transitive r-tuples in S_n, by full enumeration
unsigned long long brute_transitive_tuples(int r, int n) {
  auto sym = all_perms(n);
  std::vector<std::size_t> index(r, 0);
  unsigned long long count = 0;
  while (true) {
    std::vector<Perm> tuple;
    for (int i = 0; i < r; ++i) tuple.push_back(sym[index[i]]);
    if (generate_transitive(tuple, n)) ++count;
    int pos = r - 1;
    while (pos >= 0 && ++index[pos] == sym.size()) index[pos--] = 0;
    if (pos < 0) break;
  }
  return count;
}

unsigned long long factorial(int n) {
  unsigned long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// oracle: conjugacy classes of (transitive) r-tuples by minimal-image scan
unsigned long long brute_tuple_classes(int r, int n, bool transitive_only) {
  auto sym = all_perms(n);
  std::set<std::vector<Perm>> minima;
  std::vector<std::size_t> index(r, 0);
  while (true) {
    std::vector<Perm> tuple;
    for (int i = 0; i < r; ++i) tuple.push_back(sym[index[i]]);
    if (!transitive_only || generate_transitive(tuple, n)) {
      std::vector<Perm> best = tuple;
      for (const Perm& g : sym) {
        std::vector<Perm> candidate;
        for (const Perm& p : tuple) candidate.push_back(p.conjugated_by(g));
        if (candidate < best) best = candidate;
      }
      minima.insert(best);
    }
    int pos = r - 1;
    while (pos >= 0 && ++index[pos] == sym.size()) index[pos--] = 0;
    if (pos < 0) break;
  }
  return minima.size();
}

}  // namespace

TEST_CASE("voltage covering of c2 with a transposition is the 4-cycle") {
  auto [covering, phi] = voltage_to_covering(fixtures::split_double_cover());
  CHECK(covering.vertices().size() == 4);
  CHECK(covering.finite_edges().size() == 4);
  CHECK(covering.is_connected());
  CHECK(covering.first_betti() == 1);
  CHECK(phi.validate().ok());
  CHECK(is_covering(phi));
  CHECK(phi.degree() == 2);
  CHECK(check_totally_split(phi, phi.target().full_selection()));
}

TEST_CASE("identity voltage gives two disjoint copies") {
  auto [covering, phi] = voltage_to_covering(fixtures::trivial_double_cover());
  CHECK(covering.connected_components().size() == 2);
  CHECK(phi.degree() == 2);
  CHECK(is_covering(phi));
}

TEST_CASE("theta2 double cover with one transposition has betti 3") {
  CoveringRep rep(fixtures::theta2(), 2, {{"e2", Perm::from_cycles("(1 2)", 2)}});
  auto [covering, phi] = voltage_to_covering(rep);
  CHECK(covering.vertices().size() == 4);
  CHECK(covering.finite_edges().size() == 6);
  CHECK(covering.is_connected());
  CHECK(covering.first_betti() == 3);
  CHECK(is_covering(phi));
}

TEST_CASE("voltages on tree edges are rejected") {
  CHECK_THROWS_AS(
      CoveringRep(fixtures::c2(), 2, {{"e1", Perm::from_cycles("(1 2)", 2)}}),
      std::invalid_argument);
  AugmentedMetricGraph disconnected({{"a", 0}, {"b", 0}}, {});
  CHECK_THROWS_AS(CoveringRep(disconnected, 2, {}), std::invalid_argument);
}

TEST_CASE("enumeration counts for c2 and theta2") {
  CHECK(enumerate_coverings(fixtures::c2(), 2, true).size() == 1);
  CHECK(enumerate_coverings(fixtures::theta2(), 2, true).size() == 3);
  CHECK(enumerate_coverings(fixtures::c2(), 1, true).size() == 1);
  CHECK(enumerate_coverings(fixtures::theta2(), 1, false).size() == 1);
}

TEST_CASE("enumeration matches the brute-force class oracle") {
  // c2 has co-tree rank 1, theta2 rank 2
  for (int n = 1; n <= 4; ++n) {
    CHECK(enumerate_coverings(fixtures::c2(), n, true).size() ==
          brute_tuple_classes(1, n, true));
    CHECK(enumerate_coverings(fixtures::c2(), n, false).size() ==
          brute_tuple_classes(1, n, false));
    CHECK(enumerate_coverings(fixtures::theta2(), n, true).size() ==
          brute_tuple_classes(2, n, true));
    CHECK(enumerate_coverings(fixtures::theta2(), n, false).size() ==
          brute_tuple_classes(2, n, false));
  }
}

TEST_CASE("enumerated representatives are canonical, deterministic and valid") {
  auto reps = enumerate_coverings(fixtures::theta2(), 3, true);
  std::vector<std::vector<Perm>> forms;
  for (const auto& rep : reps) {
    CHECK(rep.is_connected_cover());
    CHECK(is_covering(voltage_to_covering(rep).morphism));
    forms.push_back(canonical_form(rep));
    CHECK(forms.back() == rep.monodromy_generators());  // already minimal
  }
  CHECK(std::is_sorted(forms.begin(), forms.end()));
  CHECK(std::adjacent_find(forms.begin(), forms.end()) == forms.end());
}

TEST_CASE("enumeration bounds raise resource errors") {
  Bounds tight;
  tight.enum_degree = 3;
  CHECK_THROWS_AS(enumerate_coverings(fixtures::c2(), 4, true, tight), ResourceError);
  Bounds tiny;
  tiny.enum_rank = 0;
  CHECK_THROWS_AS(enumerate_coverings(fixtures::c2(), 2, true, tiny), ResourceError);
}

TEST_CASE("hall recursion values") {
  // r = 2: 1, 3, 13, 71, 461
  CHECK(count_index_subgroups_free(2, 1) == 1);
  CHECK(count_index_subgroups_free(2, 2) == 3);
  CHECK(count_index_subgroups_free(2, 3) == 13);
  CHECK(count_index_subgroups_free(2, 4) == 71);
  CHECK(count_index_subgroups_free(2, 5) == 461);
  // r = 1: the infinite cyclic group has one subgroup per index
  for (long long n = 1; n <= 6; ++n) CHECK(count_index_subgroups_free(1, n) == 1);
  CHECK(count_index_subgroups_free(0, 1) == 1);
  CHECK(count_index_subgroups_free(0, 5) == 0);
  CHECK_THROWS_AS(count_index_subgroups_free(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(count_index_subgroups_free(2, 0), std::invalid_argument);
}

TEST_CASE("hall recursion matches the subgroup correspondence oracle") {
  // index-n subgroups = transitive tuples / (n-1)!
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= (r == 3 ? 4 : 5); ++n) {
      unsigned long long transitive = brute_transitive_tuples(r, n);
      CHECK(transitive % factorial(n - 1) == 0);
      CHECK(count_index_subgroups_free(r, n) == transitive / factorial(n - 1));
    }
}

TEST_CASE("abelian tame cover counts") {
  CHECK(count_abelian_tame_covers(1, 0, 2) == 4);
  CHECK(count_abelian_tame_covers(0, 2, 5) == 5);
  CHECK(count_abelian_tame_covers(0, 0, 7) == 1);
  CHECK(count_abelian_tame_covers(2, 3, 3) == checked_power(3, 6));
  CHECK(count_abelian_tame_covers(1, 0, 3, 5) == 9);
  CHECK_THROWS_AS(count_abelian_tame_covers(1, 0, 3, 3), std::domain_error);
}

TEST_CASE("smith normal form") {
  CHECK(smith_diagonal({{2, 4}, {6, 8}}) == std::vector<long long>{2, 4});
  CHECK(smith_diagonal({{0, 0, 1, 1}}) == std::vector<long long>{1});
  CHECK(smith_diagonal({{0, 0}}) == std::vector<long long>{});
  CHECK(hom_count_to_cyclic({{0, 0}}, 2, 5) == 25);
  CHECK(hom_count_to_cyclic({{2, 0}, {0, 3}}, 2, 6) == 6);  // Z/2 x Z/3
}

TEST_CASE("fiber product of the double cover with itself splits") {
  auto rep = fixtures::split_double_cover();
  FiberProduct fp = fiber_product(rep, rep);
  CHECK(fp.product.degree() == 4);
  REQUIRE(fp.components.size() == 2);
  for (const auto& component : fp.components) {
    CHECK(component.degree() == 2);
    CHECK(isomorphic_coverings(component, rep));
  }
  CHECK_FALSE(fp.projection1 == fp.projection2);
  CHECK(fp.projection1.validate().ok());
  CHECK(fp.projection2.validate().ok());
  CHECK(is_covering(fp.projection1));
  CHECK(fp.projection1.degree() == 2);
}

TEST_CASE("identity cover is the unit of the fiber product") {
  auto rep = fixtures::split_double_cover();
  CoveringRep unit(fixtures::c2(), 1, {});
  FiberProduct fp = fiber_product(unit, rep);
  CHECK(fp.product.degree() == 2);
  CHECK(isomorphic_coverings(fp.product, rep));
}

TEST_CASE("double times connected triple cover is a connected sextic cover") {
  FiberProduct fp =
      fiber_product(fixtures::split_double_cover(), fixtures::cyclic_triple_cover());
  CHECK(fp.product.degree() == 6);
  CHECK(fp.components.size() == 1);
  CHECK(fp.product.is_connected_cover());
  CHECK(is_covering(voltage_to_covering(fp.product).morphism));
}

TEST_CASE("fiber product requires the same base") {
  CHECK_THROWS_AS(fiber_product(fixtures::split_double_cover(),
                                CoveringRep(fixtures::theta2(), 2, {})),
                  std::invalid_argument);
}

TEST_CASE("canonical forms decide covering isomorphism") {
  CoveringRep a(fixtures::c2(), 3, {{"e2", Perm::from_cycles("(1 2 3)", 3)}});
  CoveringRep b(fixtures::c2(), 3, {{"e2", Perm::from_cycles("(1 3 2)", 3)}});
  CHECK(isomorphic_coverings(a, b));
  CoveringRep c(fixtures::c2(), 3, {{"e2", Perm::from_cycles("(1 2)", 3)}});
  CHECK_FALSE(isomorphic_coverings(a, c));
  Bounds tight;
  tight.canonical_degree = 2;
  CHECK_THROWS_AS(canonical_form(a, tight), ResourceError);
}
