#pragma once

#include <map>
#include <string>
#include <vector>

#include "skelcov/bounds.hpp"
#include "skelcov/coverenum.hpp"
#include "skelcov/jacobian.hpp"
#include "skelcov/permgroup.hpp"

namespace skelcov {

struct MonodromyGroup {
  int degree = 1;
  std::vector<Perm> generators;  // voltages then extra monodromy
  unsigned long long order = 1;
  bool transitive = true;
};

MonodromyGroup monodromy_group(const CoveringRep& rep, const Bounds& bounds = {});

/// A connected covering is Galois when the monodromy action is regular
/// (order equals degree). Throws std::domain_error on disconnected input.
bool is_galois(const CoveringRep& rep, const Bounds& bounds = {});

struct GaloisClosure {
  CoveringRep closure;       // right-regular monodromy over the same base
  unsigned long long group_order = 1;
  unsigned long long stabilizer_order = 1;       // H = Stab(sheet 1), [G:H] = n
  std::vector<Perm> stabilizer_deck_generators;  // H acting on the closure fiber
  CoveringRep quotient_by_stabilizer;            // isomorphic to the input
};

/// The minimal Galois covering dominating a connected covering: the fiber is
/// the monodromy group under its right regular action. The closure is Galois
/// and its quotient by the point stabilizer recovers the input; both facts
/// are verified before returning.
GaloisClosure galois_closure(const CoveringRep& rep, const Bounds& bounds = {});

/// Quotient of a covering by a subgroup of its deck group, given by fiber
/// permutations. Errors unless the permutations centralize the monodromy and
/// act freely on the sheets.
CoveringRep quotient(const CoveringRep& rep, const std::vector<Perm>& deck_subgroup,
                     const Bounds& bounds = {});

/// The closure's underlying graph by the coset construction: vertices over v
/// are the orbits of v's local monodromy on the closure fiber; edge sheets
/// join the orbits of their endpoints. Genus is assigned by the local
/// Riemann-Hurwitz count when it is a non-negative integer, and 0 otherwise
/// (leaf inertia is not part of the representation).
AugmentedMetricGraph closure_graph(const CoveringRep& rep, const GaloisClosure& closure);

struct AbelianCoverClassification {
  TorsionFiltration filtration;
  unsigned long long totally_split = 1;
  unsigned long long etale_not_split = 0;
  unsigned long long ramified = 0;
  std::vector<CyclicCover> split_covers;  // materialized and verified
};

/// Stratification of the n^(2(t+a)) cyclic classes of the full complex: the
/// totally split stratum is materialized through the H^1 classification and
/// every representative is verified totally split over the whole base.
AbelianCoverClassification classify_abelian_covers(const MetrizedComplex& complex,
                                                   long long n,
                                                   const Bounds& bounds = {});

}  // namespace skelcov
