#include "skelcov/rigid.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace skelcov {

namespace {

long long mod(long long value, long long modulus) {
  long long m = value % modulus;
  return m < 0 ? m + modulus : m;
}

std::vector<std::string> sorted_finite_edge_ids(const MetrizedComplex& c) {
  std::vector<std::string> ids;
  for (const auto& e : c.graph().finite_edges()) ids.push_back(e.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

// residue of theta on `edge` read with `from` as the starting vertex
long long oriented_residue(const HarmonicMorphism& phi, const GluingAssignment& theta,
                           const std::string& edge, const std::string& from) {
  const Edge& e = phi.source().graph().edge(edge);
  long long d = phi.dilation(edge);
  long long v = theta.residues.at(edge);
  return mod(e.from == from ? v : -v, d);
}

}  // namespace

unsigned long long gluing_data_count(const HarmonicMorphism& phi) {
  unsigned long long total = 1;
  for (const auto& e : phi.source().graph().finite_edges()) {
    long long d = phi.dilation(e.id);
    if (d < 1)
      throw std::invalid_argument("gluing data needs a finite covering (edge '" +
                                  e.id + "' is contracted)");
    if (__builtin_mul_overflow(total, static_cast<unsigned long long>(d), &total))
      throw std::overflow_error("gluing data count exceeds 64-bit range");
  }
  return total;
}

GluingAssignment trivial_gluing(const HarmonicMorphism& phi) {
  GluingAssignment g;
  for (const auto& e : phi.source().graph().finite_edges()) g.residues[e.id] = 0;
  return g;
}

GluingAssignment normalize_gluing(const HarmonicMorphism& phi, GluingAssignment g) {
  GluingAssignment out;
  for (const auto& e : phi.source().graph().finite_edges()) {
    auto it = g.residues.find(e.id);
    if (it == g.residues.end())
      throw std::invalid_argument("gluing data missing edge '" + e.id + "'");
    out.residues[e.id] = mod(it->second, phi.dilation(e.id));
  }
  if (g.residues.size() != out.residues.size())
    throw std::invalid_argument("gluing data names a non-edge");
  return out;
}

std::vector<ComplexAutomorphism> automorphism_group(const HarmonicMorphism& phi,
                                                    const Bounds& bounds) {
  const AugmentedMetricGraph& g = phi.source().graph();
  std::vector<std::string> vertex_order;
  for (const auto& v : g.vertices()) vertex_order.push_back(v.id);
  std::sort(vertex_order.begin(), vertex_order.end());
  std::vector<std::string> edge_order = sorted_finite_edge_ids(phi.source());
  std::vector<std::string> leaf_order;
  for (const auto& l : g.leaf_edges()) leaf_order.push_back(l.label);
  std::sort(leaf_order.begin(), leaf_order.end());

  std::vector<ComplexAutomorphism> result;
  ComplexAutomorphism current;
  std::set<std::string> used_vertices, used_edges, used_leaves;

  auto emit_tables = [&](auto&& self, std::size_t vi) -> void {
    if (vi == vertex_order.size()) {
      if (result.size() >= bounds.automorphisms)
        throw ResourceError("automorphism group exceeds bound " +
                            std::to_string(bounds.automorphisms));
      result.push_back(current);
      return;
    }
    const std::string& v = vertex_order[vi];
    const std::string w = current.vertex_images.at(v);
    const ResidueCurve& cv = phi.source().curve(v);
    const ResidueCurve& cw = phi.source().curve(w);
    for (std::size_t t = 0; t < cv.automorphism_table.size(); ++t) {
      const CurveAutomorphism& entry = cv.automorphism_table[t];
      bool compatible = true;
      for (const auto& h : g.incident(v)) {
        std::string image_h = (h.kind == HalfEdge::Kind::Finite)
                                  ? current.edge_images.at(h.id)
                                  : current.leaf_images.at(h.id);
        auto source_mark = cv.marks.find(h.id);
        auto target_mark = cw.marks.find(image_h);
        if (source_mark == cv.marks.end() || target_mark == cw.marks.end()) {
          compatible = false;
          break;
        }
        auto mapped = entry.mark_images.find(source_mark->second);
        if (mapped == entry.mark_images.end() || mapped->second != target_mark->second) {
          compatible = false;
          break;
        }
      }
      if (!compatible) continue;
      current.table_choice[v] = static_cast<int>(t);
      self(self, vi + 1);
      current.table_choice.erase(v);
    }
  };

  auto assign_leaves = [&](auto&& self, std::size_t li) -> void {
    if (li == leaf_order.size()) {
      emit_tables(emit_tables, 0);
      return;
    }
    const Leaf& l = g.leaf(leaf_order[li]);
    auto base_image = phi.edge_image(l.label);
    for (const auto& candidate : leaf_order) {
      if (used_leaves.count(candidate)) continue;
      const Leaf& cl = g.leaf(candidate);
      if (cl.at != current.vertex_images.at(l.at)) continue;
      if (phi.edge_image(candidate) != base_image) continue;
      if (phi.dilation(candidate) != phi.dilation(l.label)) continue;
      used_leaves.insert(candidate);
      current.leaf_images[l.label] = candidate;
      self(self, li + 1);
      current.leaf_images.erase(l.label);
      used_leaves.erase(candidate);
    }
  };

  auto assign_edges = [&](auto&& self, std::size_t ei) -> void {
    if (ei == edge_order.size()) {
      assign_leaves(assign_leaves, 0);
      return;
    }
    const Edge& e = g.edge(edge_order[ei]);
    std::set<std::string> want{current.vertex_images.at(e.from),
                               current.vertex_images.at(e.to)};
    for (const auto& candidate : edge_order) {
      if (used_edges.count(candidate)) continue;
      const Edge& ce = g.edge(candidate);
      if (std::set<std::string>{ce.from, ce.to} != want) continue;
      if (phi.edge_image(candidate) != phi.edge_image(e.id)) continue;
      if (phi.dilation(candidate) != phi.dilation(e.id)) continue;
      if (!(ce.length == e.length)) continue;
      used_edges.insert(candidate);
      current.edge_images[e.id] = candidate;
      self(self, ei + 1);
      current.edge_images.erase(e.id);
      used_edges.erase(candidate);
    }
  };

  auto assign_vertices = [&](auto&& self, std::size_t vi) -> void {
    if (vi == vertex_order.size()) {
      assign_edges(assign_edges, 0);
      return;
    }
    const std::string& v = vertex_order[vi];
    for (const auto& candidate : vertex_order) {
      if (used_vertices.count(candidate)) continue;
      if (phi.vertex_image(candidate) != phi.vertex_image(v)) continue;
      if (phi.vertex_degree(candidate) != phi.vertex_degree(v)) continue;
      if (g.vertex(candidate).genus != g.vertex(v).genus) continue;
      used_vertices.insert(candidate);
      current.vertex_images[v] = candidate;
      self(self, vi + 1);
      current.vertex_images.erase(v);
      used_vertices.erase(candidate);
    }
  };

  assign_vertices(assign_vertices, 0);
  return result;
}

ComplexAutomorphism identity_automorphism(const HarmonicMorphism& phi) {
  ComplexAutomorphism a;
  const AugmentedMetricGraph& g = phi.source().graph();
  for (const auto& v : g.vertices()) {
    a.vertex_images[v.id] = v.id;
    const ResidueCurve& curve = phi.source().curve(v.id);
    int found = -1;
    for (std::size_t t = 0; t < curve.automorphism_table.size(); ++t) {
      const auto& entry = curve.automorphism_table[t];
      bool is_id = true;
      for (const auto& [m, im] : entry.mark_images)
        if (m != im) { is_id = false; break; }
      if (is_id)
        for (const auto& h : g.incident(v.id)) {
          long long d = phi.dilation(h.id);
          auto c = entry.corrections.find(h.id);
          long long value = (c == entry.corrections.end()) ? 0 : c->second;
          if (d > 0 && mod(value, d) != 0) { is_id = false; break; }
        }
      if (is_id) { found = static_cast<int>(t); break; }
    }
    if (found < 0)
      throw std::invalid_argument("automorphism table at '" + v.id +
                                  "' lacks the identity entry");
    a.table_choice[v.id] = found;
  }
  for (const auto& e : g.finite_edges()) a.edge_images[e.id] = e.id;
  for (const auto& l : g.leaf_edges()) a.leaf_images[l.label] = l.label;
  return a;
}

namespace {

long long table_correction(const HarmonicMorphism& phi, const ComplexAutomorphism& a,
                           const std::string& vertex, const std::string& edge) {
  const ResidueCurve& curve = phi.source().curve(vertex);
  const CurveAutomorphism& entry = curve.automorphism_table.at(a.table_choice.at(vertex));
  auto it = entry.corrections.find(edge);
  return it == entry.corrections.end() ? 0 : it->second;
}

}  // namespace

ComplexAutomorphism compose(const HarmonicMorphism& phi, const ComplexAutomorphism& first,
                            const ComplexAutomorphism& second) {
  ComplexAutomorphism out;
  for (const auto& [v, mid] : first.vertex_images)
    out.vertex_images[v] = second.vertex_images.at(mid);
  for (const auto& [e, mid] : first.edge_images)
    out.edge_images[e] = second.edge_images.at(mid);
  for (const auto& [l, mid] : first.leaf_images)
    out.leaf_images[l] = second.leaf_images.at(mid);

  const AugmentedMetricGraph& g = phi.source().graph();
  for (const auto& v : g.vertices()) {
    const std::string mid = first.vertex_images.at(v.id);
    const ResidueCurve& cv = phi.source().curve(v.id);
    const CurveAutomorphism& e1 = cv.automorphism_table.at(first.table_choice.at(v.id));
    const CurveAutomorphism& e2 =
        phi.source().curve(mid).automorphism_table.at(second.table_choice.at(mid));
    // composite entry: marks through both, corrections added along the way
    std::map<std::string, std::string> want_marks;
    for (const auto& [m, im] : e1.mark_images) want_marks[m] = e2.mark_images.at(im);
    std::map<std::string, long long> want_corrections;
    for (const auto& h : g.incident(v.id)) {
      std::string mid_h = (h.kind == HalfEdge::Kind::Finite)
                              ? first.edge_images.at(h.id)
                              : first.leaf_images.at(h.id);
      long long c1 = 0, c2 = 0;
      if (auto it = e1.corrections.find(h.id); it != e1.corrections.end()) c1 = it->second;
      if (auto it = e2.corrections.find(mid_h); it != e2.corrections.end()) c2 = it->second;
      want_corrections[h.id] = c1 + c2;
    }
    int found = -1;
    for (std::size_t t = 0; t < cv.automorphism_table.size(); ++t) {
      const auto& entry = cv.automorphism_table[t];
      if (entry.mark_images != want_marks) continue;
      bool same = true;
      for (const auto& h : g.incident(v.id)) {
        long long d = phi.dilation(h.id);
        if (d <= 0) continue;
        long long have = 0;
        if (auto it = entry.corrections.find(h.id); it != entry.corrections.end())
          have = it->second;
        if (mod(have - want_corrections.at(h.id), d) != 0) { same = false; break; }
      }
      if (same) { found = static_cast<int>(t); break; }
    }
    if (found < 0)
      throw std::invalid_argument("automorphism table at '" + v.id +
                                  "' is not closed under composition");
    out.table_choice[v.id] = found;
  }
  return out;
}

GluingAssignment conjugation_action(const HarmonicMorphism& phi,
                                    const ComplexAutomorphism& alpha,
                                    const GluingAssignment& theta) {
  GluingAssignment input = normalize_gluing(phi, theta);
  GluingAssignment out;
  const AugmentedMetricGraph& g = phi.source().graph();
  for (const auto& e : g.finite_edges()) {
    long long d = phi.dilation(e.id);
    const std::string image_edge = alpha.edge_images.at(e.id);
    const std::string image_tail = alpha.vertex_images.at(e.from);
    long long transported = oriented_residue(phi, input, image_edge, image_tail);
    long long c_tail = table_correction(phi, alpha, e.from, e.id);
    long long c_head = table_correction(phi, alpha, e.to, e.id);
    out.residues[e.id] = mod(transported + c_tail - c_head, d);
  }
  return out;
}

LiftingClassification lifting_classes(const HarmonicMorphism& phi, const Bounds& bounds) {
  LiftingClassification out;
  out.gluing_total = gluing_data_count(phi);
  if (out.gluing_total > bounds.gluing_total)
    throw ResourceError("gluing data set of size " + std::to_string(out.gluing_total) +
                        " exceeds bound " + std::to_string(bounds.gluing_total));
  std::vector<ComplexAutomorphism> auts = automorphism_group(phi, bounds);
  out.automorphism_order = auts.size();

  std::vector<std::string> edges = sorted_finite_edge_ids(phi.source());
  std::vector<long long> moduli;
  for (const auto& e : edges) moduli.push_back(phi.dilation(e));

  auto to_key = [&](const GluingAssignment& g) {
    std::vector<long long> key;
    for (const auto& e : edges) key.push_back(g.residues.at(e));
    return key;
  };
  auto from_key = [&](const std::vector<long long>& key) {
    GluingAssignment g;
    for (std::size_t i = 0; i < edges.size(); ++i) g.residues[edges[i]] = key[i];
    return g;
  };

  std::set<std::vector<long long>> visited;
  std::vector<long long> odometer(edges.size(), 0);
  unsigned long long fixed_point_total = 0;
  bool more = true;
  while (more) {
    if (!visited.count(odometer)) {
      // explore the orbit of this assignment
      GluingAssignment start = from_key(odometer);
      std::set<std::vector<long long>> orbit;
      std::vector<GluingAssignment> frontier{start};
      orbit.insert(odometer);
      while (!frontier.empty()) {
        GluingAssignment current = frontier.back();
        frontier.pop_back();
        for (const auto& alpha : auts) {
          GluingAssignment next = conjugation_action(phi, alpha, current);
          auto key = to_key(next);
          if (orbit.insert(key).second) frontier.push_back(next);
        }
      }
      GluingAssignment representative = from_key(*orbit.begin());
      unsigned long long stabilizer = 0;
      for (const auto& alpha : auts)
        if (conjugation_action(phi, alpha, representative) == representative)
          ++stabilizer;
      if (stabilizer * orbit.size() != auts.size())
        throw std::logic_error("orbit-stabilizer identity failed");
      out.classes.push_back({representative, orbit.size(), stabilizer});
      visited.insert(orbit.begin(), orbit.end());
    }
    // next assignment
    more = false;
    for (std::size_t i = edges.size(); i-- > 0;) {
      if (++odometer[i] < moduli[i]) { more = true; break; }
      odometer[i] = 0;
    }
    if (edges.empty()) break;
  }

  // Burnside recount: sum of fixed points equals #orbits * |Aut|
  for (const auto& alpha : auts) {
    std::vector<long long> probe(edges.size(), 0);
    bool running = true;
    while (running) {
      GluingAssignment g = from_key(probe);
      if (conjugation_action(phi, alpha, g) == g) ++fixed_point_total;
      running = false;
      for (std::size_t i = edges.size(); i-- > 0;) {
        if (++probe[i] < moduli[i]) { running = true; break; }
        probe[i] = 0;
      }
      if (edges.empty()) break;
    }
  }
  if (fixed_point_total != out.classes.size() * auts.size())
    throw std::logic_error("Burnside recount failed");
  return out;
}

bool rigidified_morphism_check(const RigidMorphism& psi_data,
                               const HarmonicMorphism& phi1, const GluingAssignment& g1,
                               const HarmonicMorphism& phi2, const GluingAssignment& g2) {
  const HarmonicMorphism& psi = psi_data.psi;
  if (!psi.validate().ok())
    throw std::invalid_argument("psi is not a harmonic morphism");
  HarmonicMorphism composed = phi2.after(psi);
  if (!(composed == phi1))
    throw std::invalid_argument("triangle does not commute: phi2 . psi != phi1");

  GluingAssignment theta1 = normalize_gluing(phi1, g1);
  GluingAssignment theta2 = normalize_gluing(phi2, g2);
  for (const auto& e1 : phi1.source().graph().finite_edges()) {
    auto image = psi.edge_image(e1.id);
    if (!image) return false;  // contracted edges cannot carry the diagram
    long long d2 = phi2.dilation(*image);
    // theta2 read along the psi-image of e1's orientation
    long long rhs = oriented_residue(phi2, theta2, *image, psi.vertex_image(e1.from));
    long long lhs = mod(theta1.residues.at(e1.id)                     // reduction mod d2
                            + psi_data.correction(e1.to, e1.id)       // gamma_y
                            - psi_data.correction(e1.from, e1.id),    // gamma_x
                        d2);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace skelcov
