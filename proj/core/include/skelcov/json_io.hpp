#pragma once

#include <nlohmann/json.hpp>

#include "skelcov/complex.hpp"
#include "skelcov/coverenum.hpp"
#include "skelcov/graph.hpp"
#include "skelcov/jacobian.hpp"
#include "skelcov/morphism.hpp"
#include "skelcov/rigid.hpp"

namespace skelcov {

/// All JSON in this project preserves insertion order, so emitted reports are
/// byte-stable across runs.
using Json = nlohmann::ordered_json;

Json to_json(const AugmentedMetricGraph& g);
AugmentedMetricGraph graph_from_json(const Json& j);

Json to_json(const MetrizedComplex& c);
MetrizedComplex complex_from_json(const Json& j);

/// Either a bare graph or a complex; bare graphs get canonical curves.
MetrizedComplex complex_or_graph_from_json(const Json& j);

/// {"source": <complex>, "target": <complex>, "morphism": {...}}
Json to_json(const HarmonicMorphism& phi);
HarmonicMorphism morphism_from_json(const Json& j);

/// {"base": <graph|complex>, "degree": n, "voltages": {...}, "extra": [...]}
struct CoveringInput {
  CoveringRep rep;
  long long residue_char = 0;
};
Json to_json(const CoveringRep& rep);
CoveringInput covering_from_json(const Json& j);

Json to_json(const Divisor& d);
Divisor divisor_from_json(const Json& j);

/// {"gluing": {"e1'": "1 mod 2", ...}}
Json gluing_to_json(const HarmonicMorphism& phi, const GluingAssignment& g);
GluingAssignment gluing_from_json(const Json& j);

Json to_json(const ValidationReport& r);

}  // namespace skelcov
