#pragma once

#include <map>
#include <string>
#include <vector>

#include "skelcov/bounds.hpp"
#include "skelcov/graph.hpp"
#include "skelcov/morphism.hpp"
#include "skelcov/perm.hpp"

namespace skelcov {

/// A degree-n covering of a connected base graph, presented by permutation
/// voltages on the complement of the deterministic spanning tree, plus
/// optional extra monodromy permutations of vertex-curve morphisms.
///
/// Missing co-tree voltages default to the identity; voltages keyed by tree
/// edges or unknown edges are rejected.
class CoveringRep {
public:
  struct ExtraMonodromy {
    Perm perm;
    std::string at;  // vertex id, or empty when unattached
  };

  CoveringRep(AugmentedMetricGraph base, int degree,
              std::map<std::string, Perm> voltages,
              std::vector<ExtraMonodromy> extra = {});

  const AugmentedMetricGraph& base() const { return base_; }
  int degree() const { return degree_; }
  const std::vector<std::string>& tree_edges() const { return tree_; }
  const std::vector<std::string>& cotree_edges() const { return cotree_; }
  const Perm& voltage(const std::string& cotree_edge) const;
  const std::vector<ExtraMonodromy>& extra_monodromy() const { return extra_; }

  /// Voltages in co-tree order followed by the extra permutations.
  std::vector<Perm> monodromy_generators() const;

  /// Orbit decomposition of the sheet set under all monodromy generators.
  std::vector<std::vector<int>> sheet_orbits() const;
  bool is_connected_cover() const { return sheet_orbits().size() <= 1; }

  /// The covering restricted to one sheet orbit, sheets relabeled 1..|orbit|.
  CoveringRep restrict_to(const std::vector<int>& orbit) const;

private:
  AugmentedMetricGraph base_;
  int degree_ = 1;
  std::map<std::string, Perm> voltages_;
  std::vector<ExtraMonodromy> extra_;
  std::vector<std::string> tree_;
  std::vector<std::string> cotree_;
};

struct VoltageCovering {
  AugmentedMetricGraph covering;
  HarmonicMorphism morphism;
};

/// Materializes the covering graph: sheets v#1..v#n over each vertex, tree
/// edges lifted identically, co-tree edge (u,v) with voltage s joining u#i to
/// v#s(i). All dilations and local degrees are 1 and the result is totally
/// split over the full base. Extra monodromy does not enter the graph layer.
VoltageCovering voltage_to_covering(const CoveringRep& rep, long long residue_char = 0);

/// One representative per simultaneous-conjugacy class of voltage tuples, in
/// lexicographic minimal-representative order. `connected_only` keeps the
/// transitive tuples. Degree or rank above the bounds raises ResourceError.
std::vector<CoveringRep> enumerate_coverings(const AugmentedMetricGraph& base,
                                             int degree, bool connected_only,
                                             const Bounds& bounds = {});

/// Number of index-n subgroups of the free group of rank r (Hall's recursion).
unsigned long long count_index_subgroups_free(long long rank, long long index);

/// Number of cyclic-quotient maps of the tame fundamental group of a genus-g
/// curve with d punctures onto Z/n: n^(2g + max(d-1,0)), asserted against the
/// Smith-form computation on the abelianized presentation. `residue_char`
/// must be coprime to n.
unsigned long long count_abelian_tame_covers(long long genus, long long punctures,
                                             long long n, long long residue_char = 0);

struct FiberProduct {
  CoveringRep product;
  HarmonicMorphism projection1;
  HarmonicMorphism projection2;
  std::vector<CoveringRep> components;
};

/// Componentwise product of two coverings of the same base. Sheet (i,j) of
/// the product is flattened to (i-1)*n2 + j.
FiberProduct fiber_product(const CoveringRep& a, const CoveringRep& b);

/// Lexicographically minimal simultaneous conjugate of (voltages, extras).
std::vector<Perm> canonical_form(const CoveringRep& rep, const Bounds& bounds = {});

/// Same base, same degree, conjugate monodromy data (attribution respected).
bool isomorphic_coverings(const CoveringRep& a, const CoveringRep& b,
                          const Bounds& bounds = {});

}  // namespace skelcov
