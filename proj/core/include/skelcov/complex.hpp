#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "skelcov/graph.hpp"
#include "skelcov/validation.hpp"

namespace skelcov {

/// A declared automorphism of a residue curve, given through its numerical
/// data only: a permutation of the marked-point labels plus, per marked point
/// (equivalently per incident half-edge), the residue it induces on the
/// annulus identification of that edge.
struct CurveAutomorphism {
  std::map<std::string, std::string> mark_images;  // mark label -> mark label
  std::map<std::string, long long> corrections;    // half-edge id -> residue

  bool is_identity() const {
    for (const auto& [m, im] : mark_images)
      if (m != im) return false;
    for (const auto& [h, c] : corrections)
      if (c != 0) return false;
    return true;
  }
};

/// Abstract record of the smooth curve attached to a finite vertex: genus,
/// the injective marking of tangent directions, and the finite table of
/// allowed automorphisms (identity-only when omitted).
struct ResidueCurve {
  int genus = 0;
  std::map<std::string, std::string> marks;  // half-edge id -> mark label
  std::vector<CurveAutomorphism> automorphism_table;

  /// Label of the marked point attached to a half-edge.
  const std::string& mark_of(const std::string& half_edge_id) const;
};

/// Builds the identity-plus-sign table on a two-marked genus-0 curve: the
/// nontrivial element fixes both marked points and induces residue 1 on every
/// incident annulus. This is the shipped mu_2 preset.
std::vector<CurveAutomorphism> mu2_table(const ResidueCurve& curve);

struct SubcomplexSelection {
  std::set<std::string> vertices;
  std::set<std::string> edges;   // finite edge ids
  std::set<std::string> leaves;  // leaf labels
};

/// A metrized complex of k-curves: augmented graph plus one residue curve per
/// finite vertex and the residue characteristic of k. Immutable after
/// construction.
class MetrizedComplex {
public:
  MetrizedComplex() = default;
  MetrizedComplex(AugmentedMetricGraph graph,
                  std::map<std::string, ResidueCurve> curves,
                  long long residue_char = 0);

  const AugmentedMetricGraph& graph() const { return graph_; }
  const std::map<std::string, ResidueCurve>& curves() const { return curves_; }
  const ResidueCurve& curve(const std::string& vertex_id) const;
  long long residue_char() const { return residue_char_; }

  ValidationReport validate() const;

  /// Induced complex on a closed selection. Throws std::invalid_argument when
  /// the selection contains an edge or leaf with an unselected endpoint.
  MetrizedComplex subcomplex(const SubcomplexSelection& selection) const;

  SubcomplexSelection full_selection() const;

  friend bool operator==(const MetrizedComplex&, const MetrizedComplex&);

private:
  AugmentedMetricGraph graph_;
  std::map<std::string, ResidueCurve> curves_;
  long long residue_char_ = 0;
};

/// The canonical complex over a bare graph: at each vertex a curve of the
/// vertex genus whose marked points are labeled by the incident half-edge ids
/// themselves (identity-only automorphism tables).
MetrizedComplex canonical_complex(const AugmentedMetricGraph& g,
                                  long long residue_char = 0);

/// Same, but marked points of lifted half-edges keep the label of the base
/// half-edge they cover. `base_of` maps each half-edge id of `g` to a base id.
MetrizedComplex canonical_complex_over(
    const AugmentedMetricGraph& g,
    const std::map<std::string, std::string>& base_of, long long residue_char = 0);

}  // namespace skelcov
