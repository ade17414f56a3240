#pragma once

#include "skelcov/complex.hpp"
#include "skelcov/coverenum.hpp"
#include "skelcov/graph.hpp"
#include "skelcov/morphism.hpp"

namespace skelcov::fixtures {

/// Two vertices joined by two parallel unit edges; the Tate-curve skeleton.
AugmentedMetricGraph c2();

/// Two vertices joined by three parallel unit edges.
AugmentedMetricGraph theta2();

/// A single unit segment y1 -- y2.
AugmentedMetricGraph segment();

/// c2 as a metrized complex with genus-0 two-marked curves, residue char 0.
MetrizedComplex tate();

/// c2 with one genus-1 vertex: the skeleton of a genus-2 curve with t=1, a=1.
MetrizedComplex genus2();

/// The degree-2 self-cover of the Tate skeleton: both edges dilated by 2,
/// singleton fibers, mu_2 automorphism tables on the source curves.
HarmonicMorphism tate_cover();

/// Connected double cover of c2: voltage (1 2) on the co-tree edge.
CoveringRep split_double_cover();

/// Disconnected double cover of c2 (identity voltage).
CoveringRep trivial_double_cover();

/// Connected triple cover of c2 with a 3-cycle voltage.
CoveringRep cyclic_triple_cover();

/// Degree-3 covering of a segment with vertex-curve monodromy (1 2) and
/// (2 3); its monodromy group is S3 and the Galois closure has degree 6.
CoveringRep s3_cover();

}  // namespace skelcov::fixtures
