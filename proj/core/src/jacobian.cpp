#include "skelcov/jacobian.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace skelcov {

namespace {

// signed indicator of the tree path root -> vertex, per tree edge
std::map<std::string, std::map<std::string, int>> tree_potentials(
    const AugmentedMetricGraph& g, const std::vector<std::string>& tree) {
  std::set<std::string> tree_set(tree.begin(), tree.end());
  std::string root;
  for (const auto& v : g.vertices())
    if (root.empty() || v.id < root) root = v.id;
  std::map<std::string, std::map<std::string, int>> potential;
  potential[root] = {};
  std::vector<std::string> frontier{root};
  while (!frontier.empty()) {
    std::string u = frontier.back();
    frontier.pop_back();
    for (const auto& e : g.finite_edges()) {
      if (!tree_set.count(e.id)) continue;
      if (e.from != u && e.to != u) continue;
      const std::string& other = (e.from == u) ? e.to : e.from;
      if (potential.count(other)) continue;
      auto vec = potential.at(u);
      vec[e.id] += (e.from == u) ? 1 : -1;
      if (vec[e.id] == 0) vec.erase(e.id);
      potential[other] = std::move(vec);
      frontier.push_back(other);
    }
  }
  return potential;
}

struct ClassComputation {
  AugmentedMetricGraph graph;  // subdivided
  std::map<std::string, long long> coeffs;
  JacobianData jac;
  std::map<std::string, long long> tree_flow;  // s0, integer slopes on tree edges
  std::vector<Rational> w;                     // pairing with the cycle basis
  std::vector<Rational> t;                     // solution of period * t = w
};

std::vector<Rational> solve_positive_definite(std::vector<std::vector<Rational>> m,
                                              std::vector<Rational> rhs) {
  std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw std::logic_error("period matrix is singular");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      Rational f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = rhs[i] / m[i][i];
  return out;
}

ClassComputation compute_class(const AugmentedMetricGraph& graph, const Divisor& d) {
  if (divisor_degree(d) != 0)
    throw std::domain_error("divisor has degree " + std::to_string(divisor_degree(d)) +
                            ", expected 0");
  ClassComputation c;
  VertexDivisor vd = on_vertices(graph, d);
  c.graph = std::move(vd.graph);
  c.coeffs = std::move(vd.coeffs);
  c.jac = tropical_jacobian(c.graph);

  auto tree = spanning_forest(c.graph);
  auto potential = tree_potentials(c.graph, tree);
  // route the divisor along the tree: s0 = -sum n_x * path(root -> x)
  for (const auto& [x, n_x] : c.coeffs) {
    for (const auto& [eid, sign] : potential.at(x)) c.tree_flow[eid] -= n_x * sign;
  }
  // pair the routed flow with the cycle basis, weighted by edge lengths
  c.w.assign(c.jac.genus, Rational(0));
  for (int i = 0; i < c.jac.genus; ++i)
    for (const auto& [eid, coeff] : c.jac.cycles[i]) {
      auto it = c.tree_flow.find(eid);
      if (it != c.tree_flow.end())
        c.w[i] += c.graph.edge(eid).length * Rational(coeff) * Rational(it->second);
    }
  c.t = solve_positive_definite(c.jac.period, c.w);
  return c;
}

}  // namespace

long long divisor_degree(const Divisor& d) {
  long long total = 0;
  for (const auto& e : d) total += e.coeff;
  return total;
}

JacobianData tropical_jacobian(const AugmentedMetricGraph& graph) {
  if (graph.vertices().empty() || !graph.is_connected())
    throw std::domain_error("the tropical Jacobian needs a nonempty connected graph");
  JacobianData out;
  auto tree = spanning_forest(graph);
  std::set<std::string> tree_set(tree.begin(), tree.end());
  auto potential = tree_potentials(graph, tree);
  for (const auto& e : graph.finite_edges())
    if (!tree_set.count(e.id)) out.cotree.push_back(e.id);
  out.genus = static_cast<int>(out.cotree.size());
  for (const auto& f : out.cotree) {
    const Edge& e = graph.edge(f);
    std::map<std::string, int> cycle{{f, 1}};
    for (const auto& [eid, sign] : potential.at(e.from)) cycle[eid] += sign;
    for (const auto& [eid, sign] : potential.at(e.to)) cycle[eid] -= sign;
    for (auto it = cycle.begin(); it != cycle.end();)
      it = (it->second == 0) ? cycle.erase(it) : std::next(it);
    out.cycles.push_back(std::move(cycle));
  }
  out.period.assign(out.genus, std::vector<Rational>(out.genus, Rational(0)));
  for (int i = 0; i < out.genus; ++i)
    for (int j = i; j < out.genus; ++j) {
      Rational sum(0);
      for (const auto& [eid, ci] : out.cycles[i]) {
        auto it = out.cycles[j].find(eid);
        if (it != out.cycles[j].end())
          sum += graph.edge(eid).length * Rational(ci) * Rational(it->second);
      }
      out.period[i][j] = sum;
      out.period[j][i] = sum;
    }
  return out;
}

VertexDivisor on_vertices(const AugmentedMetricGraph& graph, const Divisor& d) {
  // interior support points per edge, sorted and deduplicated
  std::map<std::string, std::vector<Rational>> cuts;
  for (const auto& entry : d) {
    if (entry.at_vertex) {
      graph.vertex(entry.vertex);  // must exist
      continue;
    }
    const Edge& e = graph.edge(entry.point.edge);
    const Rational& pos = entry.point.position;
    if (pos < Rational(0) || e.length < pos)
      throw std::invalid_argument("position " + pos.str() + " outside edge '" + e.id +
                                  "'");
    if (pos.is_zero() || pos == e.length) continue;  // lands on an endpoint
    cuts[e.id].push_back(pos);
  }
  for (auto& [eid, ps] : cuts) {
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  }

  std::vector<Vertex> vs = graph.vertices();
  std::vector<Edge> es;
  std::map<std::string, std::map<Rational, std::string>> point_names;
  for (const auto& e : graph.finite_edges()) {
    auto it = cuts.find(e.id);
    if (it == cuts.end()) {
      es.push_back(e);
      continue;
    }
    std::string prev = e.from;
    Rational prev_pos(0);
    int k = 0;
    for (const auto& pos : it->second) {
      ++k;
      std::string vid = e.id + "@" + std::to_string(k);
      vs.push_back({vid, 0});
      es.push_back({e.id + "." + std::to_string(k), prev, vid, pos - prev_pos});
      point_names[e.id][pos] = vid;
      prev = vid;
      prev_pos = pos;
    }
    es.push_back({e.id + "." + std::to_string(k + 1), prev, e.to, e.length - prev_pos});
  }
  VertexDivisor out{AugmentedMetricGraph(std::move(vs), std::move(es),
                                         graph.leaf_edges()),
                    {}};
  for (const auto& entry : d) {
    std::string vid;
    if (entry.at_vertex) {
      vid = entry.vertex;
    } else {
      const Edge& e = graph.edge(entry.point.edge);
      if (entry.point.position.is_zero()) vid = e.from;
      else if (entry.point.position == e.length) vid = e.to;
      else vid = point_names.at(e.id).at(entry.point.position);
    }
    out.coeffs[vid] += entry.coeff;
  }
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
    it = (it->second == 0) ? out.coeffs.erase(it) : std::next(it);
  return out;
}

DivisorClass divisor_class(const AugmentedMetricGraph& graph, const Divisor& d) {
  ClassComputation c = compute_class(graph, d);
  DivisorClass out;
  out.zero = true;
  out.torus_coords.reserve(c.jac.genus);
  for (const auto& ti : c.t) {
    Rational frac = ti - Rational(ti.floor());
    if (!frac.is_zero()) out.zero = false;
    out.torus_coords.push_back(frac);
  }
  out.pairing.assign(c.jac.genus, Rational(0));
  for (int i = 0; i < c.jac.genus; ++i)
    for (int j = 0; j < c.jac.genus; ++j)
      out.pairing[i] += c.jac.period[i][j] * out.torus_coords[j];
  return out;
}

std::map<std::string, long long> divisor_of(const PiecewiseLinearFunction& f) {
  std::map<std::string, long long> out;
  for (const auto& e : f.domain.finite_edges()) {
    long long s = 0;
    if (auto it = f.slopes.find(e.id); it != f.slopes.end()) s = it->second;
    out[e.from] += s;
    out[e.to] -= s;
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

std::optional<PiecewiseLinearFunction> principal_witness(
    const AugmentedMetricGraph& graph, const Divisor& d) {
  ClassComputation c = compute_class(graph, d);
  for (const auto& ti : c.t)
    if (!ti.is_integer()) return std::nullopt;

  PiecewiseLinearFunction f;
  f.domain = c.graph;
  for (const auto& e : c.graph.finite_edges()) {
    long long s = 0;
    if (auto it = c.tree_flow.find(e.id); it != c.tree_flow.end()) s = it->second;
    for (int j = 0; j < c.jac.genus; ++j) {
      auto cj = c.jac.cycles[j].find(e.id);
      if (cj != c.jac.cycles[j].end()) s -= c.t[j].num() * cj->second;
    }
    if (s != 0) f.slopes[e.id] = s;
  }
  // integrate along the spanning tree from the smallest vertex id
  auto tree = spanning_forest(c.graph);
  auto potential = tree_potentials(c.graph, tree);
  for (const auto& v : c.graph.vertices()) {
    Rational value(0);
    for (const auto& [eid, sign] : potential.at(v.id)) {
      long long s = 0;
      if (auto it = f.slopes.find(eid); it != f.slopes.end()) s = it->second;
      value += Rational(sign) * Rational(s) * c.graph.edge(eid).length;
    }
    f.values[v.id] = value;
  }
  // the witness must reproduce the divisor exactly
  if (divisor_of(f) != c.coeffs)
    throw std::logic_error("witness recomputation does not match the divisor");
  return f;
}

bool is_principal(const AugmentedMetricGraph& graph, const Divisor& d) {
  return principal_witness(graph, d).has_value();
}

unsigned long long checked_power(long long n, long long exponent) {
  if (n < 1 || exponent < 0) throw std::invalid_argument("bad power arguments");
  unsigned long long out = 1;
  for (long long i = 0; i < exponent; ++i)
    if (__builtin_mul_overflow(out, static_cast<unsigned long long>(n), &out))
      throw std::overflow_error("torsion count exceeds 64-bit range");
  return out;
}

TorsionFiltration torsion_filtration(const MetrizedComplex& complex, long long n) {
  if (n < 1) throw std::invalid_argument("torsion order must be positive");
  if (complex.graph().vertices().empty() || !complex.graph().is_connected())
    throw std::domain_error("torsion filtration needs a nonempty connected complex");
  long long p = complex.residue_char();
  if (p != 0 && std::gcd(n, p) != 1)
    throw std::domain_error("order " + std::to_string(n) +
                            " is not coprime to the residue characteristic " +
                            std::to_string(p));
  TorsionFiltration out;
  out.toric_rank = complex.graph().first_betti();
  for (const auto& v : complex.graph().vertices()) out.abelian_rank += v.genus;
  out.toric = checked_power(n, out.toric_rank);
  out.connected = checked_power(n, out.toric_rank + 2 * out.abelian_rank);
  out.total = checked_power(n, 2 * (out.toric_rank + out.abelian_rank));
  return out;
}

TateModuleRanks tate_module_ranks(const MetrizedComplex& complex) {
  if (complex.graph().vertices().empty() || !complex.graph().is_connected())
    throw std::domain_error("Tate module ranks need a nonempty connected complex");
  long long t = complex.graph().first_betti();
  long long a = 0;
  for (const auto& v : complex.graph().vertices()) a += v.genus;
  return {t, t + 2 * a, 2 * t + 2 * a};
}

std::vector<CyclicCover> cyclic_split_covers(const MetrizedComplex& complex, long long n,
                                             const Bounds& bounds) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  long long p = complex.residue_char();
  if (p != 0 && std::gcd(n, p) != 1)
    throw std::domain_error("order " + std::to_string(n) +
                            " is not coprime to the residue characteristic " +
                            std::to_string(p));
  const AugmentedMetricGraph& g = complex.graph();
  if (g.vertices().empty() || !g.is_connected())
    throw std::domain_error("cyclic cover classification needs a connected complex");
  CoveringRep trivial(g, 1, {});
  const auto& cotree = trivial.cotree_edges();
  unsigned long long total = checked_power(n, static_cast<long long>(cotree.size()));
  if (total > bounds.gluing_total)
    throw ResourceError("H^1 class set of size " + std::to_string(total) +
                        " exceeds bound " + std::to_string(bounds.gluing_total));
  std::set<std::string> cotree_set(cotree.begin(), cotree.end());
  std::vector<CyclicCover> out;
  std::vector<long long> odometer(cotree.size(), 0);
  while (true) {
    CyclicCover cover{{}, CoveringRep(g, static_cast<int>(n), {})};
    std::map<std::string, Perm> voltages;
    for (std::size_t i = 0; i < cotree.size(); ++i)
      voltages[cotree[i]] = cyclic_shift(static_cast<int>(n), odometer[i]);
    for (const auto& e : g.finite_edges())
      cover.labels[e.id] = 0;
    for (std::size_t i = 0; i < cotree.size(); ++i) cover.labels[cotree[i]] = odometer[i];
    cover.rep = CoveringRep(g, static_cast<int>(n), std::move(voltages));
    out.push_back(std::move(cover));
    bool more = false;
    for (std::size_t i = odometer.size(); i-- > 0;) {
      if (++odometer[i] < n) { more = true; break; }
      odometer[i] = 0;
    }
    if (!more) break;
  }
  return out;
}

}  // namespace skelcov
