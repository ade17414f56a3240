#include "skelcov/galois.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "skelcov/morphism.hpp"

namespace skelcov {

MonodromyGroup monodromy_group(const CoveringRep& rep, const Bounds& bounds) {
  MonodromyGroup out;
  out.degree = rep.degree();
  out.generators = rep.monodromy_generators();
  PermGroup g = PermGroup::generated(out.generators, rep.degree(), bounds.group_order);
  out.order = g.order();
  out.transitive = rep.is_connected_cover();
  return out;
}

bool is_galois(const CoveringRep& rep, const Bounds& bounds) {
  MonodromyGroup m = monodromy_group(rep, bounds);
  if (!m.transitive)
    throw std::domain_error("Galois objects are connected; this covering is not");
  return m.order == static_cast<unsigned long long>(rep.degree());
}

GaloisClosure galois_closure(const CoveringRep& rep, const Bounds& bounds) {
  if (!rep.is_connected_cover())
    throw std::domain_error("the Galois closure needs a connected covering");
  std::vector<Perm> gens = rep.monodromy_generators();
  PermGroup group = PermGroup::generated(gens, rep.degree(), bounds.group_order);
  std::vector<Perm> elements = group.elements(bounds.group_order);
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    index[elements[i]] = static_cast<int>(i);
  int order = static_cast<int>(elements.size());

  // right regular action of a generator on the element list
  auto regular = [&](const Perm& g) {
    std::vector<int> img(order);
    for (int i = 0; i < order; ++i) img[i] = index.at(elements[i].then(g));
    return Perm(std::move(img));
  };

  std::map<std::string, Perm> voltages;
  for (const auto& eid : rep.cotree_edges()) voltages[eid] = regular(rep.voltage(eid));
  std::vector<CoveringRep::ExtraMonodromy> extra;
  for (const auto& x : rep.extra_monodromy()) extra.push_back({regular(x.perm), x.at});
  CoveringRep closure(rep.base(), order, std::move(voltages), std::move(extra));

  GaloisClosure out{closure, static_cast<unsigned long long>(order), 1, {}, closure};
  if (!is_galois(out.closure, bounds))
    throw std::logic_error("the regular construction failed to be Galois");

  // H = stabilizer of the first sheet, acting on the closure fiber from the
  // left (so it centralizes the right regular monodromy)
  std::vector<Perm> stabilizer_elements;
  for (const Perm& x : elements)
    if (x.apply(0) == 0) stabilizer_elements.push_back(x);
  out.stabilizer_order = stabilizer_elements.size();
  for (const Perm& h : stabilizer_elements) {
    if (h.is_identity()) continue;
    std::vector<int> img(order);
    for (int i = 0; i < order; ++i) img[i] = index.at(h.then(elements[i]));
    out.stabilizer_deck_generators.emplace_back(std::move(img));
  }
  out.quotient_by_stabilizer = quotient(out.closure, out.stabilizer_deck_generators, bounds);
  if (!isomorphic_coverings(out.quotient_by_stabilizer, rep, bounds))
    throw std::logic_error("closure quotient does not recover the covering");
  return out;
}

CoveringRep quotient(const CoveringRep& rep, const std::vector<Perm>& deck_subgroup,
                     const Bounds& bounds) {
  (void)bounds;
  std::vector<Perm> gens = rep.monodromy_generators();
  for (const Perm& s : deck_subgroup) {
    if (s.degree() != rep.degree())
      throw std::invalid_argument("deck permutation has the wrong degree");
    if (!centralizes({s}, gens))
      throw std::invalid_argument(
          "the given permutations are not deck transformations (they do not "
          "centralize the monodromy)");
  }
  auto os = orbits(deck_subgroup, rep.degree());
  std::size_t size = os.front().size();
  for (const auto& orbit : os)
    if (orbit.size() != size)
      throw std::invalid_argument("the subgroup does not act freely on the fibers");
  std::vector<int> orbit_of(rep.degree());
  for (std::size_t oi = 0; oi < os.size(); ++oi)
    for (int p : os[oi]) orbit_of[p] = static_cast<int>(oi);
  auto project = [&](const Perm& p) {
    std::vector<int> img(os.size());
    for (std::size_t oi = 0; oi < os.size(); ++oi) img[oi] = orbit_of[p.apply(os[oi][0])];
    return Perm(std::move(img));
  };
  std::map<std::string, Perm> voltages;
  for (const auto& eid : rep.cotree_edges()) voltages[eid] = project(rep.voltage(eid));
  std::vector<CoveringRep::ExtraMonodromy> extra;
  for (const auto& x : rep.extra_monodromy()) extra.push_back({project(x.perm), x.at});
  return CoveringRep(rep.base(), static_cast<int>(os.size()), std::move(voltages),
                     std::move(extra));
}

AugmentedMetricGraph closure_graph(const CoveringRep& rep, const GaloisClosure& closure) {
  const AugmentedMetricGraph& base = rep.base();
  int order = closure.closure.degree();

  // local monodromy subgroups per vertex, acting on the closure fiber
  std::map<std::string, std::vector<Perm>> local;
  for (const auto& x : closure.closure.extra_monodromy())
    if (!x.at.empty()) local[x.at].push_back(x.perm);

  std::map<std::string, std::vector<int>> orbit_of_sheet;  // vertex -> sheet -> orbit
  std::map<std::string, int> orbit_count;
  std::map<std::string, std::vector<int>> orbit_size;
  for (const auto& v : base.vertices()) {
    auto os = orbits(local[v.id], order);
    std::vector<int> label(order);
    std::vector<int> sizes;
    for (std::size_t oi = 0; oi < os.size(); ++oi) {
      sizes.push_back(static_cast<int>(os[oi].size()));
      for (int p : os[oi]) label[p] = static_cast<int>(oi);
    }
    orbit_of_sheet[v.id] = std::move(label);
    orbit_count[v.id] = static_cast<int>(os.size());
    orbit_size[v.id] = std::move(sizes);
  }

  auto vertex_name = [](const std::string& v, int orbit) {
    return v + "~" + std::to_string(orbit + 1);
  };

  std::vector<Vertex> vs;
  for (const auto& v : base.vertices())
    for (int o = 0; o < orbit_count[v.id]; ++o) {
      // local degree of the closure vertex is the orbit size; genus from the
      // Riemann-Hurwitz count over the finite directions when admissible
      long long d = orbit_size[v.id][o];
      long long rhs = d * (2LL * v.genus - 2) + 2;
      int genus = (rhs >= 0 && rhs % 2 == 0) ? static_cast<int>(rhs / 2) : 0;
      if (d == 1) genus = v.genus;
      vs.push_back({vertex_name(v.id, o), genus});
    }

  std::set<std::string> tree_set(closure.closure.tree_edges().begin(),
                                 closure.closure.tree_edges().end());
  std::vector<Edge> es;
  for (const auto& e : base.finite_edges()) {
    bool on_tree = tree_set.count(e.id) > 0;
    const Perm* sigma = on_tree ? nullptr : &closure.closure.voltage(e.id);
    for (int x = 0; x < order; ++x) {
      int y = on_tree ? x : sigma->apply(x);
      es.push_back({e.id + "~" + std::to_string(x + 1),
                    vertex_name(e.from, orbit_of_sheet[e.from][x]),
                    vertex_name(e.to, orbit_of_sheet[e.to][y]), e.length});
    }
  }
  std::vector<Leaf> ls;
  for (const auto& l : base.leaf_edges())
    for (int o = 0; o < orbit_count[l.at]; ++o)
      ls.push_back({l.label + "~" + std::to_string(o + 1), vertex_name(l.at, o)});
  return AugmentedMetricGraph(std::move(vs), std::move(es), std::move(ls));
}

AbelianCoverClassification classify_abelian_covers(const MetrizedComplex& complex,
                                                   long long n, const Bounds& bounds) {
  AbelianCoverClassification out;
  out.filtration = torsion_filtration(complex, n);
  out.split_covers = cyclic_split_covers(complex, n, bounds);
  if (out.split_covers.size() != out.filtration.toric)
    throw std::logic_error("H^1 class count disagrees with the toric torsion count");
  SubcomplexSelection everything = complex.full_selection();
  for (const auto& cover : out.split_covers) {
    VoltageCovering material = voltage_to_covering(cover.rep, complex.residue_char());
    if (!is_covering(material.morphism) ||
        !check_totally_split(material.morphism, everything))
      throw std::logic_error("a cyclic class failed the totally split verification");
  }
  out.totally_split = out.filtration.toric;
  out.etale_not_split = out.filtration.connected - out.filtration.toric;
  out.ramified = out.filtration.total - out.filtration.connected;
  return out;
}

}  // namespace skelcov
