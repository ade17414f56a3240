#pragma once

#include <map>
#include <optional>
#include <string>

#include "skelcov/complex.hpp"

namespace skelcov {

struct MarkImage {
  std::string to;
  long long degree = 1;
};

/// A morphism of metrized complexes given combinatorially: vertex and edge
/// maps, integer dilation factors, per-vertex local degrees and (optionally)
/// explicit mark maps for the curve morphisms. Dilations are constant on
/// edges, so harmonicity at interior points reduces to the vertex checks.
///
/// Finite edges may be contracted (dilation 0, no edge image); leaves always
/// map to leaves. Immutable after construction.
class HarmonicMorphism {
public:
  HarmonicMorphism(MetrizedComplex source, MetrizedComplex target,
                   std::map<std::string, std::string> vertex_map,
                   std::map<std::string, std::string> edge_map,
                   std::map<std::string, long long> dilation,
                   std::map<std::string, long long> vertex_degree,
                   std::map<std::string, std::map<std::string, MarkImage>> mark_maps = {});

  static HarmonicMorphism identity(const MetrizedComplex& complex);

  const MetrizedComplex& source() const { return source_; }
  const MetrizedComplex& target() const { return target_; }
  const std::map<std::string, std::string>& vertex_map() const { return vertex_map_; }
  const std::map<std::string, std::string>& edge_map() const { return edge_map_; }
  const std::map<std::string, long long>& dilations() const { return dilation_; }
  const std::map<std::string, long long>& vertex_degrees() const { return vertex_degree_; }

  std::string vertex_image(const std::string& source_vertex) const;
  /// Edge or leaf image; empty when the edge is contracted.
  std::optional<std::string> edge_image(const std::string& source_edge) const;
  long long dilation(const std::string& source_edge) const;
  long long vertex_degree(const std::string& source_vertex) const;

  /// Effective mark map at a source vertex: the explicit one when given,
  /// otherwise derived from the edge map (mark of h' goes to mark of phi(h')
  /// with local degree d_{h'}).
  std::map<std::string, MarkImage> mark_map_at(const std::string& source_vertex) const;

  /// True when source edge e' traverses its image in the stored orientation
  /// (tail of e' over tail of phi(e')). Requires a non-contracted finite edge.
  bool aligned(const std::string& source_edge) const;

  ValidationReport validate() const;
  bool is_finite() const;
  /// Tameness of the covering: residue characteristic divides no dilation,
  /// no local degree at a marked point and no vertex degree.
  bool is_tame() const;
  ValidationReport check_local_rh() const;

  /// Common fiber-degree per target component (keyed by the component's
  /// smallest vertex id). Throws std::domain_error when the sums disagree.
  std::map<std::string, long long> degree_per_component() const;
  /// Sum of the per-component degrees.
  long long degree() const;

  /// this = psi, inner = phi: returns psi . phi. Requires inner.target ==
  /// this->source.
  HarmonicMorphism after(const HarmonicMorphism& inner) const;

  friend bool operator==(const HarmonicMorphism&, const HarmonicMorphism&);

private:
  MetrizedComplex source_;
  MetrizedComplex target_;
  std::map<std::string, std::string> vertex_map_;
  std::map<std::string, std::string> edge_map_;
  std::map<std::string, long long> dilation_;
  std::map<std::string, long long> vertex_degree_;
  std::map<std::string, std::map<std::string, MarkImage>> mark_maps_;
};

/// validate + finite + tame + local Riemann-Hurwitz. The local RH equality is
/// the standard tame condition; exploratory inputs that do not model curve
/// ramification completely may disable it.
bool is_covering(const HarmonicMorphism& phi, bool require_local_rh = true);

/// Subdivides target edge `target_edge` at `pos` and every fiber edge at the
/// corresponding pulled-back point; harmonicity and degree are preserved.
HarmonicMorphism subdivide_fiber(const HarmonicMorphism& phi,
                                 const std::string& target_edge, const Rational& pos);

/// Every source edge over the selected target edges has dilation 1. Throws
/// std::invalid_argument unless the selection is a subcomplex of the target.
bool check_unramified(const HarmonicMorphism& phi, const SubcomplexSelection& sigma0);

/// Unramified, and every selected target vertex has exactly deg(phi) vertex
/// preimages (degree taken on that vertex's target component).
bool check_totally_split(const HarmonicMorphism& phi, const SubcomplexSelection& sigma0);

}  // namespace skelcov
