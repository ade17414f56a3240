#pragma once

#include <map>
#include <string>
#include <vector>

#include "skelcov/bounds.hpp"
#include "skelcov/morphism.hpp"

namespace skelcov {

/// One residue class per finite source edge, modulo that edge's dilation.
/// Values are stored against the edge's tail-to-head orientation; reading the
/// edge backwards negates the residue.
struct GluingAssignment {
  std::map<std::string, long long> residues;

  friend bool operator==(const GluingAssignment&, const GluingAssignment&) = default;
  friend auto operator<=>(const GluingAssignment&, const GluingAssignment&) = default;
};

/// A degree-1 automorphism of the source covering over the base: a graph
/// automorphism commuting with the covering map, one declared curve
/// automorphism per vertex, and the correction residues those entries induce
/// on the incident annuli.
struct ComplexAutomorphism {
  std::map<std::string, std::string> vertex_images;
  std::map<std::string, std::string> edge_images;  // finite edges
  std::map<std::string, std::string> leaf_images;
  std::map<std::string, int> table_choice;  // vertex -> index into its table

  friend bool operator==(const ComplexAutomorphism&, const ComplexAutomorphism&) = default;
  friend auto operator<=>(const ComplexAutomorphism&, const ComplexAutomorphism&) = default;
};

/// |G(Sigma',X)|: product of the dilations over the finite source edges.
unsigned long long gluing_data_count(const HarmonicMorphism& phi);

/// Gluing data with every residue zero, the fixed trivialization base point.
GluingAssignment trivial_gluing(const HarmonicMorphism& phi);

/// Normalizes residues into [0, d_e) and checks the key set.
GluingAssignment normalize_gluing(const HarmonicMorphism& phi, GluingAssignment g);

/// Aut_Sigma(Sigma'): every fiber-preserving graph automorphism crossed with
/// the per-vertex table entries, filtered by mark-map compatibility.
/// Deterministic order. Throws ResourceError above bounds.automorphisms.
std::vector<ComplexAutomorphism> automorphism_group(const HarmonicMorphism& phi,
                                                    const Bounds& bounds = {});

ComplexAutomorphism identity_automorphism(const HarmonicMorphism& phi);

/// "first then second". Requires the tables to contain the composite entries.
ComplexAutomorphism compose(const HarmonicMorphism& phi,
                            const ComplexAutomorphism& first,
                            const ComplexAutomorphism& second);

/// (alpha . Theta)_e = Theta_{alpha(e)} + c_{alpha,tail}(e) - c_{alpha,head}(e),
/// orientations transported through the graph part.
GluingAssignment conjugation_action(const HarmonicMorphism& phi,
                                    const ComplexAutomorphism& alpha,
                                    const GluingAssignment& theta);

struct LiftingClass {
  GluingAssignment representative;  // lexicographically smallest in its orbit
  unsigned long long orbit_size = 0;
  unsigned long long stabilizer_order = 0;
};

struct LiftingClassification {
  std::vector<LiftingClass> classes;
  unsigned long long gluing_total = 0;
  unsigned long long automorphism_order = 0;
};

/// Orbits of the gluing data under the conjugation action. The Burnside count
/// and the orbit-stabilizer identity are recomputed exactly and must agree.
LiftingClassification lifting_classes(const HarmonicMorphism& phi,
                                      const Bounds& bounds = {});

/// A morphism of rigidified coverings: the harmonic morphism plus the
/// correction residues its star-shaped lifts induce per (vertex, edge) end.
struct RigidMorphism {
  HarmonicMorphism psi;
  std::map<std::string, std::map<std::string, long long>> corrections;  // vertex -> edge -> c

  long long correction(const std::string& vertex, const std::string& edge) const {
    auto v = corrections.find(vertex);
    if (v == corrections.end()) return 0;
    auto e = v->second.find(edge);
    return e == v->second.end() ? 0 : e->second;
  }
};

/// True when psi commutes with the two coverings and the induced diagram of
/// annulus identifications commutes on every finite edge. Throws
/// std::invalid_argument when psi is not harmonic or the triangle fails.
bool rigidified_morphism_check(const RigidMorphism& psi_data,
                               const HarmonicMorphism& phi1, const GluingAssignment& g1,
                               const HarmonicMorphism& phi2, const GluingAssignment& g2);

}  // namespace skelcov
