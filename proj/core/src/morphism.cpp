#include "skelcov/morphism.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace skelcov {

namespace {

bool is_leaf_of(const MetrizedComplex& c, const std::string& id) {
  return c.graph().has_leaf(id);
}

}  // namespace

HarmonicMorphism::HarmonicMorphism(
    MetrizedComplex source, MetrizedComplex target,
    std::map<std::string, std::string> vertex_map,
    std::map<std::string, std::string> edge_map,
    std::map<std::string, long long> dilation,
    std::map<std::string, long long> vertex_degree,
    std::map<std::string, std::map<std::string, MarkImage>> mark_maps)
    : source_(std::move(source)),
      target_(std::move(target)),
      vertex_map_(std::move(vertex_map)),
      edge_map_(std::move(edge_map)),
      dilation_(std::move(dilation)),
      vertex_degree_(std::move(vertex_degree)),
      mark_maps_(std::move(mark_maps)) {
  // leaves default to dilation 1 when mapped but not dilated explicitly
  for (const auto& l : source_.graph().leaf_edges())
    if (edge_map_.count(l.label) && !dilation_.count(l.label)) dilation_[l.label] = 1;
}

HarmonicMorphism HarmonicMorphism::identity(const MetrizedComplex& complex) {
  std::map<std::string, std::string> vm, em;
  std::map<std::string, long long> dil, deg;
  for (const auto& v : complex.graph().vertices()) {
    vm[v.id] = v.id;
    deg[v.id] = 1;
  }
  for (const auto& e : complex.graph().finite_edges()) {
    em[e.id] = e.id;
    dil[e.id] = 1;
  }
  for (const auto& l : complex.graph().leaf_edges()) {
    em[l.label] = l.label;
    dil[l.label] = 1;
  }
  return HarmonicMorphism(complex, complex, std::move(vm), std::move(em),
                          std::move(dil), std::move(deg));
}

std::string HarmonicMorphism::vertex_image(const std::string& source_vertex) const {
  auto it = vertex_map_.find(source_vertex);
  if (it == vertex_map_.end())
    throw std::invalid_argument("vertex '" + source_vertex + "' has no image");
  return it->second;
}

std::optional<std::string> HarmonicMorphism::edge_image(
    const std::string& source_edge) const {
  auto it = edge_map_.find(source_edge);
  if (it == edge_map_.end()) return std::nullopt;
  return it->second;
}

long long HarmonicMorphism::dilation(const std::string& source_edge) const {
  auto it = dilation_.find(source_edge);
  return it == dilation_.end() ? 0 : it->second;
}

long long HarmonicMorphism::vertex_degree(const std::string& source_vertex) const {
  auto it = vertex_degree_.find(source_vertex);
  if (it == vertex_degree_.end())
    throw std::invalid_argument("vertex '" + source_vertex + "' has no local degree");
  return it->second;
}

bool HarmonicMorphism::aligned(const std::string& source_edge) const {
  const Edge& e = source_.graph().edge(source_edge);
  auto image = edge_image(source_edge);
  if (!image) throw std::invalid_argument("edge '" + source_edge + "' is contracted");
  const Edge& f = target_.graph().edge(*image);
  return vertex_image(e.from) == f.from;
}

std::map<std::string, MarkImage> HarmonicMorphism::mark_map_at(
    const std::string& source_vertex) const {
  auto it = mark_maps_.find(source_vertex);
  if (it != mark_maps_.end()) return it->second;
  // derived: the mark of h' goes to the mark of phi(h') with degree d_{h'}
  std::map<std::string, MarkImage> out;
  const ResidueCurve& curve = source_.curve(source_vertex);
  const std::string target_vertex = vertex_image(source_vertex);
  const ResidueCurve& target_curve = target_.curve(target_vertex);
  for (const auto& h : source_.graph().incident(source_vertex)) {
    long long d = dilation(h.id);
    if (d <= 0) continue;
    auto image = edge_image(h.id);
    if (!image) continue;
    auto source_mark = curve.marks.find(h.id);
    auto target_mark = target_curve.marks.find(*image);
    if (source_mark == curve.marks.end() || target_mark == target_curve.marks.end())
      continue;
    out[source_mark->second] = {target_mark->second, d};
  }
  return out;
}

ValidationReport HarmonicMorphism::validate() const {
  ValidationReport report;
  {
    ValidationReport s = source_.validate();
    ValidationReport t = target_.validate();
    if (!s.ok() || !t.ok()) {
      for (const auto& v : s.violations)
        report.add("invalid-source", v.code + ": " + v.detail);
      for (const auto& v : t.violations)
        report.add("invalid-target", v.code + ": " + v.detail);
      return report;
    }
  }
  if (source_.residue_char() != target_.residue_char())
    report.add("residue-char-mismatch", "source and target have different residue fields");

  // vertex map total and well targeted
  for (const auto& v : source_.graph().vertices()) {
    auto it = vertex_map_.find(v.id);
    if (it == vertex_map_.end())
      report.add("vertex-unmapped", "source vertex '" + v.id + "' has no image");
    else if (!target_.graph().has_vertex(it->second))
      report.add("vertex-image-unknown", "vertex '" + v.id + "' maps to unknown '" +
                                             it->second + "'");
    if (!vertex_degree_.count(v.id))
      report.add("vertex-degree-missing", "no local degree at '" + v.id + "'");
    else if (vertex_degree_.at(v.id) < 1)
      report.add("vertex-degree-nonpositive",
                 "local degree at '" + v.id + "' must be positive");
  }
  if (!report.ok()) return report;

  // edge structure
  for (const auto& e : source_.graph().finite_edges()) {
    long long d = dilation(e.id);
    if (d < 0) {
      report.add("dilation-negative", "edge '" + e.id + "'");
      continue;
    }
    auto image = edge_image(e.id);
    if (d == 0) {
      if (vertex_image(e.from) != vertex_image(e.to))
        report.add("contracted-edge-endpoints",
                   "contracted edge '" + e.id + "' has endpoints over distinct vertices");
      continue;
    }
    if (!image) {
      report.add("edge-unmapped", "edge '" + e.id + "' has positive dilation but no image");
      continue;
    }
    if (!target_.graph().has_edge(*image)) {
      report.add("edge-image-unknown", "edge '" + e.id + "' maps to unknown '" + *image + "'");
      continue;
    }
    const Edge& f = target_.graph().edge(*image);
    std::set<std::string> want{f.from, f.to};
    std::set<std::string> got{vertex_image(e.from), vertex_image(e.to)};
    if (want != got)
      report.add("edge-endpoint-incompatible",
                 "edge '" + e.id + "' does not respect the vertex map");
    if (!(f.length == Rational(d) * e.length))
      report.add("length-incompatible", "edge '" + e.id + "': " + f.length.str() +
                                            " != " + std::to_string(d) + " * " +
                                            e.length.str());
  }
  for (const auto& l : source_.graph().leaf_edges()) {
    auto image = edge_image(l.label);
    long long d = dilation(l.label);
    if (!image) {
      report.add("leaf-unmapped", "leaf '" + l.label + "' has no image");
      continue;
    }
    if (d < 1) {
      report.add("contracted-leaf", "leaf '" + l.label + "' has dilation " +
                                        std::to_string(d));
      continue;
    }
    if (!is_leaf_of(target_, *image)) {
      report.add("leaf-image-not-leaf", "leaf '" + l.label + "' maps to '" + *image + "'");
      continue;
    }
    if (target_.graph().leaf(*image).at != vertex_image(l.at))
      report.add("leaf-endpoint-incompatible",
                 "leaf '" + l.label + "' does not respect the vertex map");
  }
  if (!report.ok()) return report;

  // harmonicity: at each source vertex, for every direction at the image the
  // dilations above it sum to the local degree
  for (const auto& v : source_.graph().vertices()) {
    const std::string w = vertex_image(v.id);
    long long claimed = vertex_degree(v.id);
    std::map<std::string, long long> above;  // target half-edge id -> sum
    for (const auto& h : target_.graph().incident(w)) above[h.id] = 0;
    for (const auto& h : source_.graph().incident(v.id)) {
      long long d = dilation(h.id);
      if (d <= 0) continue;
      auto image = edge_image(h.id);
      if (image) above[*image] += d;
    }
    for (const auto& [direction, sum] : above) {
      if (sum != claimed)
        report.add("degree depends on direction",
                   "at '" + v.id + "': direction '" + direction + "' carries " +
                       std::to_string(sum) + ", local degree is " +
                       std::to_string(claimed));
    }
  }

  // mark maps: explicit ones must agree with the edge map, marked local
  // degrees with the dilations
  for (const auto& v : source_.graph().vertices()) {
    auto derived = [&]() {
      auto saved = mark_maps_.find(v.id);
      if (saved == mark_maps_.end()) return std::map<std::string, MarkImage>{};
      return saved->second;
    }();
    if (derived.empty()) continue;
    const ResidueCurve& curve = source_.curve(v.id);
    const ResidueCurve& target_curve = target_.curve(vertex_image(v.id));
    for (const auto& h : source_.graph().incident(v.id)) {
      long long d = dilation(h.id);
      if (d <= 0) continue;
      auto image = edge_image(h.id);
      if (!image) continue;
      const std::string& sm = curve.mark_of(h.id);
      const std::string& tm = target_curve.mark_of(*image);
      auto it = derived.find(sm);
      if (it == derived.end() || it->second.to != tm || it->second.degree != d)
        report.add("mark-map-inconsistent",
                   "at '" + v.id + "': marked point '" + sm +
                       "' must map to '" + tm + "' with local degree " +
                       std::to_string(d));
    }
  }

  // surjectivity onto each hit target component
  auto components = target_.graph().connected_components();
  for (const auto& component : components) {
    bool hit = false;
    for (const auto& [sv, tv] : vertex_map_)
      if (component.has_vertex(tv)) { hit = true; break; }
    if (!hit) continue;
    std::set<std::string> covered_vertices, covered_edges, covered_leaves;
    for (const auto& [sv, tv] : vertex_map_) covered_vertices.insert(tv);
    for (const auto& [se, te] : edge_map_)
      if (dilation(se) > 0) { covered_edges.insert(te); covered_leaves.insert(te); }
    for (const auto& v : component.vertices())
      if (!covered_vertices.count(v.id))
        report.add("not-surjective", "target vertex '" + v.id + "' has no preimage");
    for (const auto& e : component.finite_edges())
      if (!covered_edges.count(e.id))
        report.add("not-surjective", "target edge '" + e.id + "' has no preimage");
    for (const auto& l : component.leaf_edges())
      if (!covered_leaves.count(l.label))
        report.add("not-surjective", "target leaf '" + l.label + "' has no preimage");
  }
  return report;
}

bool HarmonicMorphism::is_finite() const {
  for (const auto& e : source_.graph().finite_edges())
    if (dilation(e.id) == 0) return false;
  for (const auto& l : source_.graph().leaf_edges())
    if (dilation(l.label) == 0) return false;
  return true;
}

bool HarmonicMorphism::is_tame() const {
  if (!is_finite()) return false;
  long long p = target_.residue_char();
  if (p == 0) return true;
  for (const auto& [e, d] : dilation_)
    if (d > 0 && d % p == 0) return false;
  for (const auto& [v, d] : vertex_degree_)
    if (d % p == 0) return false;
  return true;
}

ValidationReport HarmonicMorphism::check_local_rh() const {
  ValidationReport report;
  if (!is_finite()) {
    report.add("not-finite", "local Riemann-Hurwitz requires a finite morphism");
    return report;
  }
  for (const auto& v : source_.graph().vertices()) {
    long long d = vertex_degree(v.id);
    long long lhs = 2LL * v.genus - 2;
    long long rhs = d * (2LL * target_.graph().vertex(vertex_image(v.id)).genus - 2);
    for (const auto& h : source_.graph().incident(v.id)) rhs += dilation(h.id) - 1;
    if (lhs != rhs)
      report.add("rh-violation", "at '" + v.id + "': 2g-2 = " + std::to_string(lhs) +
                                     " but degree data gives " + std::to_string(rhs));
  }
  return report;
}

std::map<std::string, long long> HarmonicMorphism::degree_per_component() const {
  std::map<std::string, long long> out;
  for (const auto& component : target_.graph().connected_components()) {
    std::string key = component.vertices().front().id;
    for (const auto& v : component.vertices()) key = std::min(key, v.id);
    std::optional<long long> common;
    auto check = [&](long long sum, const std::string& where) {
      if (!common) common = sum;
      if (*common != sum)
        throw std::domain_error("degree not well-defined: fiber over " + where +
                                " carries " + std::to_string(sum) + ", elsewhere " +
                                std::to_string(*common));
    };
    for (const auto& v : component.vertices()) {
      long long sum = 0;
      for (const auto& [sv, tv] : vertex_map_)
        if (tv == v.id) sum += vertex_degree(sv);
      check(sum, "vertex '" + v.id + "'");
    }
    for (const auto& e : component.finite_edges()) {
      long long sum = 0;
      for (const auto& [se, te] : edge_map_)
        if (te == e.id) sum += dilation(se);
      check(sum, "edge '" + e.id + "'");
    }
    for (const auto& l : component.leaf_edges()) {
      long long sum = 0;
      for (const auto& [se, te] : edge_map_)
        if (te == l.label) sum += dilation(se);
      check(sum, "leaf '" + l.label + "'");
    }
    out[key] = common.value_or(0);
  }
  return out;
}

long long HarmonicMorphism::degree() const {
  long long total = 0;
  for (const auto& [component, d] : degree_per_component()) total += d;
  return total;
}

HarmonicMorphism HarmonicMorphism::after(const HarmonicMorphism& inner) const {
  // composability is about the combinatorial data; mark labelings may differ
  if (!(inner.target_.graph() == source_.graph()) ||
      inner.target_.residue_char() != source_.residue_char())
    throw std::invalid_argument("morphisms are not composable");
  std::map<std::string, std::string> vm, em;
  std::map<std::string, long long> dil, deg;
  for (const auto& [v, mid] : inner.vertex_map_) {
    vm[v] = vertex_image(mid);
    deg[v] = inner.vertex_degree(v) * vertex_degree(mid);
  }
  for (const auto& e : inner.source_.graph().finite_edges()) {
    long long d0 = inner.dilation(e.id);
    if (d0 == 0) { dil[e.id] = 0; continue; }
    auto mid = inner.edge_image(e.id);
    long long d1 = dilation(*mid);
    dil[e.id] = d0 * d1;
    if (d1 > 0) em[e.id] = *edge_image(*mid);
  }
  for (const auto& l : inner.source_.graph().leaf_edges()) {
    auto mid = inner.edge_image(l.label);
    if (!mid) continue;
    auto out = edge_image(*mid);
    if (!out) continue;
    em[l.label] = *out;
    dil[l.label] = inner.dilation(l.label) * dilation(*mid);
  }
  return HarmonicMorphism(inner.source_, target_, std::move(vm), std::move(em),
                          std::move(dil), std::move(deg));
}

bool operator==(const HarmonicMorphism& a, const HarmonicMorphism& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ &&
         a.vertex_map_ == b.vertex_map_ && a.edge_map_ == b.edge_map_ &&
         a.dilation_ == b.dilation_ && a.vertex_degree_ == b.vertex_degree_;
}

bool is_covering(const HarmonicMorphism& phi, bool require_local_rh) {
  return phi.validate().ok() && phi.is_finite() && phi.is_tame() &&
         (!require_local_rh || phi.check_local_rh().ok());
}

HarmonicMorphism subdivide_fiber(const HarmonicMorphism& phi,
                                 const std::string& target_edge, const Rational& pos) {
  const Edge& e = phi.target().graph().edge(target_edge);
  std::string new_target_vertex = target_edge + "@";
  AugmentedMetricGraph tg =
      phi.target().graph().subdivide(target_edge, pos, new_target_vertex);
  MetrizedComplex target = canonical_complex(tg, phi.target().residue_char());

  AugmentedMetricGraph sg = phi.source().graph();
  std::map<std::string, std::string> vm = phi.vertex_map();
  std::map<std::string, std::string> em = phi.edge_map();
  std::map<std::string, long long> dil = phi.dilations();
  std::map<std::string, long long> deg = phi.vertex_degrees();

  std::vector<std::string> fiber;
  for (const auto& f : sg.finite_edges())
    if (phi.edge_image(f.id) == target_edge) fiber.push_back(f.id);
  for (const auto& fid : fiber) {
    const Edge f = sg.edge(fid);
    long long d = phi.dilation(fid);
    bool forward = (phi.vertex_image(f.from) == e.from);
    Rational cut = forward ? pos / Rational(d) : (e.length - pos) / Rational(d);
    std::string nv = fid + "@";
    sg = sg.subdivide(fid, cut, nv);
    vm[nv] = new_target_vertex;
    deg[nv] = d;
    em.erase(fid);
    dil.erase(fid);
    em[fid + ".a"] = forward ? target_edge + ".a" : target_edge + ".b";
    em[fid + ".b"] = forward ? target_edge + ".b" : target_edge + ".a";
    dil[fid + ".a"] = d;
    dil[fid + ".b"] = d;
  }
  MetrizedComplex source = canonical_complex(sg, phi.source().residue_char());
  return HarmonicMorphism(std::move(source), std::move(target), std::move(vm),
                          std::move(em), std::move(dil), std::move(deg));
}

bool check_unramified(const HarmonicMorphism& phi, const SubcomplexSelection& sigma0) {
  phi.target().subcomplex(sigma0);  // throws unless a genuine subcomplex
  for (const auto& e : phi.source().graph().finite_edges()) {
    auto image = phi.edge_image(e.id);
    if (image && sigma0.edges.count(*image) && phi.dilation(e.id) != 1) return false;
  }
  return true;
}

bool check_totally_split(const HarmonicMorphism& phi, const SubcomplexSelection& sigma0) {
  if (!check_unramified(phi, sigma0)) return false;
  // component degree for each selected target vertex
  std::map<std::string, long long> degree_of_vertex;
  auto degrees = phi.degree_per_component();
  for (const auto& component : phi.target().graph().connected_components()) {
    std::string key = component.vertices().front().id;
    for (const auto& v : component.vertices()) key = std::min(key, v.id);
    for (const auto& v : component.vertices()) degree_of_vertex[v.id] = degrees.at(key);
  }
  for (const auto& vid : sigma0.vertices) {
    long long preimages = 0;
    for (const auto& [sv, tv] : phi.vertex_map())
      if (tv == vid) ++preimages;
    if (preimages != degree_of_vertex.at(vid)) return false;
  }
  return true;
}

}  // namespace skelcov
