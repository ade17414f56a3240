#include <doctest.h>

#include "skelcov/fixtures.hpp"
#include "skelcov/galois.hpp"
#include "skelcov/jacobian.hpp"

using namespace skelcov;

namespace {

// tiny deterministic linear congruential generator for property sampling
struct Lcg {
  unsigned long long state;
  explicit Lcg(unsigned long long seed) : state(seed) {}
  unsigned long long next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  }
  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(next() % static_cast<unsigned long long>(
                                                     hi - lo + 1));
  }
};

// random tropical meromorphic function: integer slopes on the tree, bends on
// co-tree edges where the potential difference forces a non-integer slope
PiecewiseLinearFunction random_function(const AugmentedMetricGraph& g, Lcg& rng) {
  auto tree = spanning_forest(g);
  std::set<std::string> tree_set(tree.begin(), tree.end());
  std::map<std::string, Rational> value;
  std::string root;
  for (const auto& v : g.vertices())
    if (root.empty() || v.id < root) root = v.id;
  value[root] = Rational(0);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& e : g.finite_edges()) {
      if (!tree_set.count(e.id)) continue;
      if (value.count(e.from) && !value.count(e.to)) {
        value[e.to] = value[e.from] + Rational(rng.range(-3, 3)) * e.length;
        grew = true;
      } else if (value.count(e.to) && !value.count(e.from)) {
        value[e.from] = value[e.to] - Rational(rng.range(-3, 3)) * e.length;
        grew = true;
      }
    }
  }
  PiecewiseLinearFunction f;
  f.domain = g;
  std::vector<std::pair<std::string, std::pair<Rational, std::string>>> bends;
  for (const auto& e : g.finite_edges()) {
    Rational rise = value.at(e.to) - value.at(e.from);
    Rational slope = rise / e.length;
    if (slope.is_integer()) {
      if (slope.num() != 0) f.slopes[e.id] = slope.num();
      continue;
    }
    // bend once: slope a on [0,x], a+1 on [x,len] with x = (a+1)len - rise
    long long a = slope.floor();
    Rational x = Rational(a + 1) * e.length - rise;
    bends.push_back({e.id, {x, e.from}});
    f.domain = f.domain.subdivide(e.id, x, e.id + "@", e.id + ".a", e.id + ".b");
    if (a != 0) f.slopes[e.id + ".a"] = a;
    f.slopes[e.id + ".b"] = a + 1;
  }
  // vertex values on the subdivided domain
  f.values = value;
  for (const auto& [eid, bend] : bends)
    f.values[eid + "@"] = f.values.at(bend.second) +
                          Rational(f.slopes.count(eid + ".a") ? f.slopes[eid + ".a"] : 0) *
                              bend.first;
  return f;
}

Divisor divisor_from_coeffs(const std::map<std::string, long long>& coeffs) {
  Divisor d;
  for (const auto& [v, c] : coeffs) d.push_back(DivisorEntry::on_vertex(v, c));
  return d;
}

}  // namespace

TEST_CASE("period matrix of c2 is [2]") {
  auto jac = tropical_jacobian(fixtures::c2());
  CHECK(jac.genus == 1);
  REQUIRE(jac.period.size() == 1);
  CHECK(jac.period[0][0] == Rational(2));
}

TEST_CASE("period matrix of theta2 is [[2,1],[1,2]]") {
  auto jac = tropical_jacobian(fixtures::theta2());
  CHECK(jac.genus == 2);
  CHECK(jac.period[0][0] == Rational(2));
  CHECK(jac.period[0][1] == Rational(1));
  CHECK(jac.period[1][0] == Rational(1));
  CHECK(jac.period[1][1] == Rational(2));
}

TEST_CASE("trees have trivial jacobians") {
  auto jac = tropical_jacobian(fixtures::segment());
  CHECK(jac.genus == 0);
  CHECK(jac.period.empty());
  CHECK_THROWS_AS(tropical_jacobian(AugmentedMetricGraph({{"a", 0}, {"b", 0}}, {})),
                  std::domain_error);
}

TEST_CASE("the zero divisor has zero class") {
  auto cls = divisor_class(fixtures::c2(), {});
  CHECK(cls.zero);
  CHECK(is_principal(fixtures::c2(), {}));
}

TEST_CASE("antipodal difference on c2 is 1 mod 2") {
  Divisor d{DivisorEntry::on_vertex("v1", 1), DivisorEntry::on_vertex("v2", -1)};
  auto cls = divisor_class(fixtures::c2(), d);
  CHECK_FALSE(cls.zero);
  REQUIRE(cls.pairing.size() == 1);
  CHECK(cls.pairing[0] == Rational(1));
  CHECK(cls.torus_coords[0] == Rational(1, 2));
  CHECK_FALSE(is_principal(fixtures::c2(), d));
}

TEST_CASE("twice the antipodal difference is principal with the textbook witness") {
  Divisor d{DivisorEntry::on_vertex("v1", 2), DivisorEntry::on_vertex("v2", -2)};
  CHECK(divisor_class(fixtures::c2(), d).zero);
  auto witness = principal_witness(fixtures::c2(), d);
  REQUIRE(witness.has_value());
  CHECK(witness->values.at("v1") == Rational(0));
  CHECK(witness->values.at("v2") == Rational(1));
  CHECK(witness->slopes.at("e1") == 1);
  CHECK(witness->slopes.at("e2") == 1);
  auto recomputed = divisor_of(*witness);
  CHECK(recomputed.at("v1") == 2);
  CHECK(recomputed.at("v2") == -2);
}

TEST_CASE("degree must vanish") {
  Divisor d{DivisorEntry::on_vertex("v1", 1)};
  CHECK(divisor_degree(d) == 1);
  CHECK_THROWS_AS(divisor_class(fixtures::c2(), d), std::domain_error);
}

TEST_CASE("interior points trigger subdivision") {
  Divisor d{DivisorEntry::on_edge("e1", Rational(1, 3), 1),
            DivisorEntry::on_vertex("v1", -1)};
  auto vd = on_vertices(fixtures::c2(), d);
  CHECK(vd.graph.vertices().size() == 3);
  CHECK(vd.coeffs.at("e1@1") == 1);
  auto cls = divisor_class(fixtures::c2(), d);
  CHECK_FALSE(cls.zero);  // 1/3 of the way around is not in the lattice
  // an endpoint position lands on the vertex itself
  Divisor endpoint{DivisorEntry::on_edge("e1", Rational(0), 1),
                   DivisorEntry::on_vertex("v1", -1)};
  CHECK(divisor_class(fixtures::c2(), endpoint).zero);
}

TEST_CASE("principality is a subgroup property") {
  Lcg rng(12345);
  auto g = fixtures::theta2();
  int trials = 0;
  while (trials < 25) {
    auto f1 = random_function(g, rng);
    auto f2 = random_function(g, rng);
    Divisor d1 = divisor_from_coeffs(divisor_of(f1));
    Divisor d2 = divisor_from_coeffs(divisor_of(f2));
    // supports may use subdivided vertices; only combine vertex-supported ones
    bool vertex_supported = true;
    for (const auto& entry : d1)
      if (!g.has_vertex(entry.vertex)) vertex_supported = false;
    for (const auto& entry : d2)
      if (!g.has_vertex(entry.vertex)) vertex_supported = false;
    if (!vertex_supported) { ++trials; continue; }
    REQUIRE(is_principal(g, d1));
    REQUIRE(is_principal(g, d2));
    std::map<std::string, long long> sum;
    for (const auto& entry : d1) sum[entry.vertex] += entry.coeff;
    for (const auto& entry : d2) sum[entry.vertex] += entry.coeff;
    CHECK(is_principal(g, divisor_from_coeffs(sum)));
    ++trials;
  }
}

TEST_CASE("divisors of random functions have zero class") {
  Lcg rng(99);
  // mixed lengths force genuine bends (and hence subdivision) on co-tree edges
  AugmentedMetricGraph mixed({{"v1", 0}, {"v2", 0}},
                             {{"e1", "v1", "v2", Rational(1)},
                              {"e2", "v1", "v2", Rational(2)},
                              {"e3", "v1", "v2", Rational(1, 2)}});
  for (const AugmentedMetricGraph& g : {fixtures::c2(), fixtures::theta2(), mixed}) {
    for (int i = 0; i < 50; ++i) {
      auto f = random_function(g, rng);
      Divisor d = divisor_from_coeffs(divisor_of(f));
      CHECK(divisor_degree(d) == 0);
      auto cls = divisor_class(f.domain, d);
      CHECK(cls.zero);
      CHECK(is_principal(f.domain, d));
    }
  }
}

TEST_CASE("torsion filtration on the tate curve") {
  auto t = torsion_filtration(fixtures::tate(), 2);
  CHECK(t.toric == 2);
  CHECK(t.connected == 2);
  CHECK(t.total == 4);
  CHECK(t.toric_rank == 1);
  CHECK(t.abelian_rank == 0);
  auto one = torsion_filtration(fixtures::tate(), 1);
  CHECK((one.toric == 1 && one.connected == 1 && one.total == 1));
}

TEST_CASE("torsion filtration on the genus-2 skeleton") {
  for (long long n : {2LL, 3LL, 5LL}) {
    auto t = torsion_filtration(fixtures::genus2(), n);
    CHECK(t.toric == checked_power(n, 1));
    CHECK(t.connected == checked_power(n, 3));
    CHECK(t.total == checked_power(n, 4));
  }
}

TEST_CASE("torsion filtration enforces tameness") {
  AugmentedMetricGraph g = fixtures::c2();
  MetrizedComplex c = canonical_complex(g, 2);
  CHECK_THROWS_AS(torsion_filtration(c, 2), std::domain_error);
  CHECK(torsion_filtration(c, 3).toric == 3);
}

TEST_CASE("tate module ranks") {
  auto genus2 = tate_module_ranks(fixtures::genus2());
  CHECK(genus2.toric == 1);
  CHECK(genus2.connected == 3);
  CHECK(genus2.total == 4);
  auto tate = tate_module_ranks(fixtures::tate());
  CHECK((tate.toric == 1 && tate.connected == 1 && tate.total == 2));
  auto tree = tate_module_ranks(canonical_complex(fixtures::segment(), 0));
  CHECK((tree.toric == 0 && tree.connected == 0 && tree.total == 0));
}

TEST_CASE("cyclic split covers of c2 at n = 2") {
  auto covers = cyclic_split_covers(fixtures::tate(), 2);
  REQUIRE(covers.size() == 2);
  int connected = 0;
  for (const auto& cover : covers) {
    auto material = voltage_to_covering(cover.rep);
    CHECK(is_covering(material.morphism));
    CHECK(check_totally_split(material.morphism,
                              material.morphism.target().full_selection()));
    if (cover.rep.is_connected_cover()) ++connected;
  }
  CHECK(connected == 1);  // the 4-cycle; the trivial class splits into copies
}

TEST_CASE("cyclic split cover counts are n^t") {
  CHECK(cyclic_split_covers(canonical_complex(fixtures::segment(), 0), 5).size() == 1);
  CHECK(cyclic_split_covers(canonical_complex(fixtures::theta2(), 0), 3).size() == 9);
  // toric torsion equals the class count equals n^g
  auto t = torsion_filtration(canonical_complex(fixtures::theta2(), 0), 3);
  CHECK(t.toric == 9);
  CHECK(t.toric == checked_power(3, tropical_jacobian(fixtures::theta2()).genus));
}

TEST_CASE("divisibility chain of the torsion counts") {
  for (long long n : {2LL, 3LL}) {
    auto t = torsion_filtration(fixtures::genus2(), n);
    CHECK(t.connected % t.toric == 0);
    CHECK(t.total % t.connected == 0);
    CHECK(t.connected / t.toric == checked_power(n, 2 * t.abelian_rank));
    CHECK(t.total / t.connected == checked_power(n, t.toric_rank));
  }
}
