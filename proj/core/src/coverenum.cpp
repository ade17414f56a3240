#include "skelcov/coverenum.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "skelcov/snf.hpp"

namespace skelcov {

namespace {

std::string sheet_name(const std::string& base_id, int sheet) {
  return base_id + "#" + std::to_string(sheet + 1);
}

using u128 = unsigned __int128;
const u128 kU64Max = ~0ULL;

unsigned long long narrow_u128(u128 v, const char* what) {
  if (v > kU64Max) throw std::overflow_error(what);
  return static_cast<unsigned long long>(v);
}

}  // namespace

CoveringRep::CoveringRep(AugmentedMetricGraph base, int degree,
                         std::map<std::string, Perm> voltages,
                         std::vector<ExtraMonodromy> extra)
    : base_(std::move(base)), degree_(degree), extra_(std::move(extra)) {
  if (degree_ < 1) throw std::invalid_argument("covering degree must be positive");
  if (base_.vertices().empty() || !base_.is_connected())
    throw std::invalid_argument("covering base must be a nonempty connected graph");
  tree_ = spanning_forest(base_);
  std::set<std::string> tree_set(tree_.begin(), tree_.end());
  for (const auto& e : base_.finite_edges())
    if (!tree_set.count(e.id)) cotree_.push_back(e.id);
  for (const auto& [eid, perm] : voltages) {
    if (tree_set.count(eid))
      throw std::invalid_argument("voltage assigned to spanning-tree edge '" + eid + "'");
    if (std::find(cotree_.begin(), cotree_.end(), eid) == cotree_.end())
      throw std::invalid_argument("voltage on unknown edge '" + eid + "'");
    if (perm.degree() != degree_)
      throw std::invalid_argument("voltage on '" + eid + "' has degree " +
                                  std::to_string(perm.degree()) + ", expected " +
                                  std::to_string(degree_));
  }
  for (const auto& eid : cotree_) {
    auto it = voltages.find(eid);
    voltages_[eid] = (it != voltages.end()) ? it->second : Perm::identity(degree_);
  }
  for (const auto& x : extra_) {
    if (x.perm.degree() != degree_)
      throw std::invalid_argument("extra monodromy permutation has wrong degree");
    if (!x.at.empty() && !base_.has_vertex(x.at))
      throw std::invalid_argument("extra monodromy attached to unknown vertex '" +
                                  x.at + "'");
  }
}

const Perm& CoveringRep::voltage(const std::string& cotree_edge) const {
  auto it = voltages_.find(cotree_edge);
  if (it == voltages_.end())
    throw std::invalid_argument("'" + cotree_edge + "' is not a co-tree edge");
  return it->second;
}

std::vector<Perm> CoveringRep::monodromy_generators() const {
  std::vector<Perm> gens;
  for (const auto& eid : cotree_) gens.push_back(voltages_.at(eid));
  for (const auto& x : extra_) gens.push_back(x.perm);
  return gens;
}

std::vector<std::vector<int>> CoveringRep::sheet_orbits() const {
  return orbits(monodromy_generators(), degree_);
}

CoveringRep CoveringRep::restrict_to(const std::vector<int>& orbit) const {
  std::vector<int> sorted = orbit;
  std::sort(sorted.begin(), sorted.end());
  std::map<int, int> relabel;
  for (std::size_t i = 0; i < sorted.size(); ++i) relabel[sorted[i]] = static_cast<int>(i);
  auto restrict_perm = [&](const Perm& p) {
    std::vector<int> img(sorted.size());
    for (int old : sorted) img[relabel.at(old)] = relabel.at(p.apply(old));
    return Perm(std::move(img));
  };
  std::map<std::string, Perm> vs;
  for (const auto& [eid, p] : voltages_) vs[eid] = restrict_perm(p);
  std::vector<ExtraMonodromy> ex;
  for (const auto& x : extra_) ex.push_back({restrict_perm(x.perm), x.at});
  return CoveringRep(base_, static_cast<int>(sorted.size()), std::move(vs),
                     std::move(ex));
}

VoltageCovering voltage_to_covering(const CoveringRep& rep, long long residue_char) {
  const AugmentedMetricGraph& base = rep.base();
  int n = rep.degree();
  std::set<std::string> tree_set(rep.tree_edges().begin(), rep.tree_edges().end());

  std::vector<Vertex> vs;
  for (const auto& v : base.vertices())
    for (int i = 0; i < n; ++i) vs.push_back({sheet_name(v.id, i), v.genus});
  std::vector<Edge> es;
  std::map<std::string, std::string> vm, em, base_of;
  std::map<std::string, long long> dil, deg;
  for (const auto& e : base.finite_edges()) {
    bool on_tree = tree_set.count(e.id) > 0;
    const Perm* sigma = on_tree ? nullptr : &rep.voltage(e.id);
    for (int i = 0; i < n; ++i) {
      int j = on_tree ? i : sigma->apply(i);
      std::string id = sheet_name(e.id, i);
      es.push_back({id, sheet_name(e.from, i), sheet_name(e.to, j), e.length});
      em[id] = e.id;
      dil[id] = 1;
      base_of[id] = e.id;
    }
  }
  std::vector<Leaf> ls;
  for (const auto& l : base.leaf_edges()) {
    for (int i = 0; i < n; ++i) {
      std::string id = sheet_name(l.label, i);
      ls.push_back({id, sheet_name(l.at, i)});
      em[id] = l.label;
      dil[id] = 1;
      base_of[id] = l.label;
    }
  }
  for (const auto& v : base.vertices())
    for (int i = 0; i < n; ++i) {
      vm[sheet_name(v.id, i)] = v.id;
      deg[sheet_name(v.id, i)] = 1;
    }
  AugmentedMetricGraph covering(std::move(vs), std::move(es), std::move(ls));
  MetrizedComplex source = canonical_complex_over(covering, base_of, residue_char);
  MetrizedComplex target = canonical_complex(base, residue_char);
  HarmonicMorphism phi(std::move(source), std::move(target), std::move(vm),
                       std::move(em), std::move(dil), std::move(deg));
  return {covering, std::move(phi)};
}

namespace {

// true when no conjugate of the tuple prefix is lexicographically smaller
bool prefix_minimal(const std::vector<Perm>& prefix, const std::vector<Perm>& sym) {
  for (const Perm& g : sym) {
    if (g.is_identity()) continue;
    for (const Perm& p : prefix) {
      Perm c = p.conjugated_by(g);
      if (c < p) return false;
      if (p < c) break;
    }
  }
  return true;
}

void enumerate_tuples(std::vector<Perm>& prefix, std::size_t rank,
                      const std::vector<Perm>& sym,
                      const std::function<void(const std::vector<Perm>&)>& emit) {
  if (prefix.size() == rank) {
    emit(prefix);
    return;
  }
  for (const Perm& p : sym) {
    prefix.push_back(p);
    if (prefix_minimal(prefix, sym)) enumerate_tuples(prefix, rank, sym, emit);
    prefix.pop_back();
  }
}

std::vector<Perm> symmetric_group(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

std::vector<CoveringRep> enumerate_coverings(const AugmentedMetricGraph& base,
                                             int degree, bool connected_only,
                                             const Bounds& bounds) {
  if (base.vertices().empty() || !base.is_connected())
    throw std::invalid_argument(
        "enumeration needs a nonempty connected base; enumerate per component");
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  CoveringRep trivial(base, 1, {});
  std::size_t rank = trivial.cotree_edges().size();
  if (degree > bounds.enum_degree)
    throw ResourceError("degree " + std::to_string(degree) + " exceeds bound " +
                        std::to_string(bounds.enum_degree));
  if (static_cast<int>(rank) > bounds.enum_rank)
    throw ResourceError("co-tree rank " + std::to_string(rank) + " exceeds bound " +
                        std::to_string(bounds.enum_rank));

  std::vector<Perm> sym = symmetric_group(degree);
  std::vector<CoveringRep> out;
  std::vector<Perm> prefix;
  enumerate_tuples(prefix, rank, sym, [&](const std::vector<Perm>& tuple) {
    if (connected_only && !generate_transitive(tuple, degree)) return;
    std::map<std::string, Perm> voltages;
    for (std::size_t i = 0; i < rank; ++i)
      voltages[trivial.cotree_edges()[i]] = tuple[i];
    out.emplace_back(base, degree, std::move(voltages));
  });
  return out;
}

unsigned long long count_index_subgroups_free(long long rank, long long index) {
  if (rank < 0 || index < 1)
    throw std::invalid_argument("subgroup counting needs rank >= 0 and index >= 1");
  if (rank == 0) return index == 1 ? 1 : 0;

  const char* overflow = "subgroup count exceeds 64-bit range";
  auto powm = [&](u128 base_v, long long exp) {
    u128 r = 1;
    for (long long i = 0; i < exp; ++i) {
      r *= base_v;
      if (r > kU64Max) throw std::overflow_error(overflow);
    }
    return r;
  };
  std::vector<u128> factorial(index + 1, 1);
  for (long long i = 1; i <= index; ++i) {
    factorial[i] = factorial[i - 1] * static_cast<unsigned long long>(i);
    if (factorial[i] > kU64Max) throw std::overflow_error(overflow);
  }
  std::vector<u128> a(index + 1, 0);
  for (long long n = 1; n <= index; ++n) {
    u128 total = static_cast<unsigned long long>(n) * powm(factorial[n], rank - 1);
    if (total > kU64Max) throw std::overflow_error(overflow);
    for (long long i = 1; i < n; ++i) {
      u128 term = powm(factorial[n - i], rank - 1) * a[i];
      if (term > total) throw std::overflow_error(overflow);
      total -= term;
    }
    a[n] = total;
  }
  return narrow_u128(a[index], overflow);
}

unsigned long long count_abelian_tame_covers(long long genus, long long punctures,
                                             long long n, long long residue_char) {
  if (genus < 0 || punctures < 0 || n < 1)
    throw std::invalid_argument("need genus >= 0, punctures >= 0, n >= 1");
  if (residue_char != 0 && std::gcd(n, residue_char) != 1)
    throw std::domain_error("order " + std::to_string(n) +
                            " is not coprime to the residue characteristic " +
                            std::to_string(residue_char));
  // single relation [x_1,y_1]...[x_g,y_g] z_1...z_d, abelianized
  int generators = static_cast<int>(2 * genus + punctures);
  std::vector<long long> row(generators, 0);
  for (long long j = 0; j < punctures; ++j) row[2 * genus + j] = 1;
  unsigned long long via_smith = hom_count_to_cyclic({row}, generators, n);

  long long exponent = 2 * genus + std::max<long long>(punctures - 1, 0);
  u128 closed = 1;
  for (long long i = 0; i < exponent; ++i) {
    closed *= static_cast<unsigned long long>(n);
    if (closed > kU64Max)
      throw std::overflow_error("abelian cover count exceeds 64-bit range");
  }
  if (static_cast<u128>(via_smith) != closed)
    throw std::logic_error("Smith-form count disagrees with the closed form");
  return via_smith;
}

FiberProduct fiber_product(const CoveringRep& a, const CoveringRep& b) {
  if (!(a.base() == b.base()))
    throw std::invalid_argument("fiber product needs coverings of the same base");
  if (a.extra_monodromy().size() != b.extra_monodromy().size())
    throw std::invalid_argument("fiber product needs matching extra monodromy lists");
  for (std::size_t i = 0; i < a.extra_monodromy().size(); ++i)
    if (a.extra_monodromy()[i].at != b.extra_monodromy()[i].at)
      throw std::invalid_argument("extra monodromy attachment points differ");

  int n1 = a.degree(), n2 = b.degree();
  int n = n1 * n2;
  auto flat = [n2](int i, int j) { return i * n2 + j; };
  auto pair_perm = [&](const Perm& s, const Perm& t) {
    std::vector<int> img(n);
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n2; ++j) img[flat(i, j)] = flat(s.apply(i), t.apply(j));
    return Perm(std::move(img));
  };
  std::map<std::string, Perm> voltages;
  for (const auto& eid : a.cotree_edges())
    voltages[eid] = pair_perm(a.voltage(eid), b.voltage(eid));
  std::vector<CoveringRep::ExtraMonodromy> extra;
  for (std::size_t i = 0; i < a.extra_monodromy().size(); ++i)
    extra.push_back({pair_perm(a.extra_monodromy()[i].perm, b.extra_monodromy()[i].perm),
                     a.extra_monodromy()[i].at});
  CoveringRep product(a.base(), n, std::move(voltages), std::move(extra));

  // projections between the materialized covering complexes
  auto build_projection = [&](const CoveringRep& factor, bool first) {
    VoltageCovering top = voltage_to_covering(product);
    VoltageCovering bottom = voltage_to_covering(factor);
    std::map<std::string, std::string> vm, em;
    std::map<std::string, long long> dil, deg;
    auto component_of = [&](int f) { return first ? f / n2 : f % n2; };
    for (const auto& v : a.base().vertices())
      for (int f = 0; f < n; ++f) {
        vm[sheet_name(v.id, f)] = sheet_name(v.id, component_of(f));
        deg[sheet_name(v.id, f)] = 1;
      }
    for (const auto& e : a.base().finite_edges())
      for (int f = 0; f < n; ++f) {
        em[sheet_name(e.id, f)] = sheet_name(e.id, component_of(f));
        dil[sheet_name(e.id, f)] = 1;
      }
    for (const auto& l : a.base().leaf_edges())
      for (int f = 0; f < n; ++f) {
        em[sheet_name(l.label, f)] = sheet_name(l.label, component_of(f));
        dil[sheet_name(l.label, f)] = 1;
      }
    return HarmonicMorphism(top.morphism.source(), bottom.morphism.source(),
                            std::move(vm), std::move(em), std::move(dil),
                            std::move(deg));
  };
  HarmonicMorphism p1 = build_projection(a, true);
  HarmonicMorphism p2 = build_projection(b, false);

  std::vector<CoveringRep> components;
  for (const auto& orbit : product.sheet_orbits())
    components.push_back(product.restrict_to(orbit));
  return {std::move(product), std::move(p1), std::move(p2), std::move(components)};
}

std::vector<Perm> canonical_form(const CoveringRep& rep, const Bounds& bounds) {
  if (rep.degree() > bounds.canonical_degree)
    throw ResourceError("canonical form bounded to degree " +
                        std::to_string(bounds.canonical_degree));
  std::vector<Perm> tuple = rep.monodromy_generators();
  std::vector<Perm> best = tuple;
  std::vector<int> img(rep.degree());
  std::iota(img.begin(), img.end(), 0);
  do {
    Perm g{std::vector<int>(img)};
    std::vector<Perm> candidate;
    candidate.reserve(tuple.size());
    for (const Perm& p : tuple) candidate.push_back(p.conjugated_by(g));
    if (candidate < best) best = std::move(candidate);
  } while (std::next_permutation(img.begin(), img.end()));
  return best;
}

bool isomorphic_coverings(const CoveringRep& a, const CoveringRep& b,
                          const Bounds& bounds) {
  if (!(a.base() == b.base()) || a.degree() != b.degree()) return false;
  if (a.extra_monodromy().size() != b.extra_monodromy().size()) return false;
  for (std::size_t i = 0; i < a.extra_monodromy().size(); ++i)
    if (a.extra_monodromy()[i].at != b.extra_monodromy()[i].at) return false;
  return canonical_form(a, bounds) == canonical_form(b, bounds);
}

}  // namespace skelcov
