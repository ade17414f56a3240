#include "skelcov/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace skelcov {

namespace {

bool is_zero_or_prime(long long p) {
  if (p == 0) return true;
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

const std::string& ResidueCurve::mark_of(const std::string& half_edge_id) const {
  auto it = marks.find(half_edge_id);
  if (it == marks.end())
    throw std::invalid_argument("no marked point for half-edge '" + half_edge_id + "'");
  return it->second;
}

std::vector<CurveAutomorphism> mu2_table(const ResidueCurve& curve) {
  CurveAutomorphism identity;
  CurveAutomorphism sign;
  for (const auto& [half_edge, mark] : curve.marks) {
    identity.mark_images[mark] = mark;
    identity.corrections[half_edge] = 0;
    sign.mark_images[mark] = mark;
    sign.corrections[half_edge] = 1;
  }
  return {identity, sign};
}

MetrizedComplex::MetrizedComplex(AugmentedMetricGraph graph,
                                 std::map<std::string, ResidueCurve> curves,
                                 long long residue_char)
    : graph_(std::move(graph)), curves_(std::move(curves)), residue_char_(residue_char) {
  for (auto& [vid, curve] : curves_) {
    if (curve.automorphism_table.empty()) {
      CurveAutomorphism identity;
      for (const auto& [half_edge, mark] : curve.marks) {
        identity.mark_images[mark] = mark;
        identity.corrections[half_edge] = 0;
      }
      curve.automorphism_table.push_back(std::move(identity));
    }
  }
}

const ResidueCurve& MetrizedComplex::curve(const std::string& vertex_id) const {
  auto it = curves_.find(vertex_id);
  if (it == curves_.end())
    throw std::invalid_argument("no residue curve at vertex '" + vertex_id + "'");
  return it->second;
}

ValidationReport MetrizedComplex::validate() const {
  ValidationReport report = graph_.validate();
  if (!is_zero_or_prime(residue_char_))
    report.add("residue-char-invalid",
               "residue characteristic " + std::to_string(residue_char_) +
                   " is neither 0 nor prime");
  for (const auto& v : graph_.vertices()) {
    auto it = curves_.find(v.id);
    if (it == curves_.end()) {
      report.add("missing-curve", "vertex '" + v.id + "' has no residue curve");
      continue;
    }
    const ResidueCurve& curve = it->second;
    if (curve.genus != v.genus)
      report.add("genus mismatch", "curve at '" + v.id + "' has genus " +
                                       std::to_string(curve.genus) +
                                       " but the vertex has genus " +
                                       std::to_string(v.genus));
    std::set<std::string> expected;
    for (const auto& h : graph_.incident(v.id)) expected.insert(h.id);
    std::set<std::string> marked;
    std::set<std::string> labels;
    for (const auto& [half_edge, label] : curve.marks) {
      marked.insert(half_edge);
      if (!labels.insert(label).second)
        report.add("reduction map not injective",
                   "curve at '" + v.id + "' marks two tangent directions with '" +
                       label + "'");
    }
    if (marked != expected) {
      for (const auto& h : expected)
        if (!marked.count(h))
          report.add("mark-missing",
                     "curve at '" + v.id + "' has no marked point for '" + h + "'");
      for (const auto& h : marked)
        if (!expected.count(h))
          report.add("mark-extraneous", "curve at '" + v.id +
                                            "' marks non-incident direction '" + h +
                                            "'");
    }
    for (std::size_t a = 0; a < curve.automorphism_table.size(); ++a) {
      const auto& aut = curve.automorphism_table[a];
      std::set<std::string> seen;
      for (const auto& [mark, image] : aut.mark_images) {
        if (!labels.count(mark) || !labels.count(image) || !seen.insert(image).second)
          report.add("automorphism-invalid",
                     "table entry " + std::to_string(a) + " at '" + v.id +
                         "' is not a permutation of marked points");
      }
    }
  }
  for (const auto& [vid, curve] : curves_) {
    (void)curve;
    if (!graph_.has_vertex(vid))
      report.add("curve-at-unknown-vertex",
                 "residue curve attached to unknown vertex '" + vid + "'");
  }
  return report;
}

SubcomplexSelection MetrizedComplex::full_selection() const {
  SubcomplexSelection s;
  for (const auto& v : graph_.vertices()) s.vertices.insert(v.id);
  for (const auto& e : graph_.finite_edges()) s.edges.insert(e.id);
  for (const auto& l : graph_.leaf_edges()) s.leaves.insert(l.label);
  return s;
}

MetrizedComplex MetrizedComplex::subcomplex(const SubcomplexSelection& selection) const {
  for (const auto& vid : selection.vertices)
    if (!graph_.has_vertex(vid))
      throw std::invalid_argument("selection names unknown vertex '" + vid + "'");
  std::vector<Vertex> vs;
  for (const auto& v : graph_.vertices())
    if (selection.vertices.count(v.id)) vs.push_back(v);
  std::vector<Edge> es;
  for (const auto& eid : selection.edges) {
    const Edge& e = graph_.edge(eid);
    if (!selection.vertices.count(e.from) || !selection.vertices.count(e.to))
      throw std::invalid_argument("selection is not closed: edge '" + eid +
                                  "' has an unselected endpoint");
    es.push_back(e);
  }
  std::vector<Leaf> ls;
  for (const auto& label : selection.leaves) {
    const Leaf& l = graph_.leaf(label);
    if (!selection.vertices.count(l.at))
      throw std::invalid_argument("selection is not closed: leaf '" + label +
                                  "' has an unselected anchor");
    ls.push_back(l);
  }
  std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  std::sort(ls.begin(), ls.end(),
            [](const Leaf& a, const Leaf& b) { return a.label < b.label; });
  AugmentedMetricGraph g(std::move(vs), std::move(es), std::move(ls));

  std::map<std::string, ResidueCurve> cs;
  for (const auto& vid : selection.vertices) {
    auto it = curves_.find(vid);
    if (it == curves_.end()) continue;
    ResidueCurve restricted;
    restricted.genus = it->second.genus;
    std::set<std::string> kept_marks;
    for (const auto& h : g.incident(vid)) {
      auto mark = it->second.marks.find(h.id);
      if (mark != it->second.marks.end()) {
        restricted.marks[h.id] = mark->second;
        kept_marks.insert(mark->second);
      }
    }
    for (const auto& aut : it->second.automorphism_table) {
      CurveAutomorphism r;
      bool closed = true;
      for (const auto& [mark, image] : aut.mark_images) {
        if (!kept_marks.count(mark)) continue;
        if (!kept_marks.count(image)) { closed = false; break; }
        r.mark_images[mark] = image;
      }
      if (!closed) continue;
      for (const auto& [half_edge, c] : aut.corrections)
        if (restricted.marks.count(half_edge)) r.corrections[half_edge] = c;
      restricted.automorphism_table.push_back(std::move(r));
    }
    cs[vid] = std::move(restricted);
  }
  return MetrizedComplex(std::move(g), std::move(cs), residue_char_);
}

bool operator==(const MetrizedComplex& a, const MetrizedComplex& b) {
  if (!(a.graph_ == b.graph_) || a.residue_char_ != b.residue_char_) return false;
  if (a.curves_.size() != b.curves_.size()) return false;
  for (const auto& [vid, ca] : a.curves_) {
    auto it = b.curves_.find(vid);
    if (it == b.curves_.end()) return false;
    const auto& cb = it->second;
    if (ca.genus != cb.genus || ca.marks != cb.marks) return false;
    if (ca.automorphism_table.size() != cb.automorphism_table.size()) return false;
    for (std::size_t i = 0; i < ca.automorphism_table.size(); ++i) {
      if (ca.automorphism_table[i].mark_images != cb.automorphism_table[i].mark_images ||
          ca.automorphism_table[i].corrections != cb.automorphism_table[i].corrections)
        return false;
    }
  }
  return true;
}

MetrizedComplex canonical_complex(const AugmentedMetricGraph& g, long long residue_char) {
  std::map<std::string, std::string> identity;
  for (const auto& e : g.finite_edges()) identity[e.id] = e.id;
  for (const auto& l : g.leaf_edges()) identity[l.label] = l.label;
  return canonical_complex_over(g, identity, residue_char);
}

MetrizedComplex canonical_complex_over(const AugmentedMetricGraph& g,
                                       const std::map<std::string, std::string>& base_of,
                                       long long residue_char) {
  std::map<std::string, ResidueCurve> curves;
  for (const auto& v : g.vertices()) {
    ResidueCurve c;
    c.genus = v.genus;
    for (const auto& h : g.incident(v.id)) {
      auto it = base_of.find(h.id);
      c.marks[h.id] = (it != base_of.end()) ? it->second : h.id;
    }
    curves[v.id] = std::move(c);
  }
  return MetrizedComplex(g, std::move(curves), residue_char);
}

}  // namespace skelcov
