#include "skelcov/fixtures.hpp"

namespace skelcov::fixtures {

AugmentedMetricGraph c2() {
  return AugmentedMetricGraph({{"v1", 0}, {"v2", 0}},
                              {{"e1", "v1", "v2", Rational(1)},
                               {"e2", "v1", "v2", Rational(1)}});
}

AugmentedMetricGraph theta2() {
  return AugmentedMetricGraph({{"v1", 0}, {"v2", 0}},
                              {{"e1", "v1", "v2", Rational(1)},
                               {"e2", "v1", "v2", Rational(1)},
                               {"e3", "v1", "v2", Rational(1)}});
}

AugmentedMetricGraph segment() {
  return AugmentedMetricGraph({{"y1", 0}, {"y2", 0}},
                              {{"e1", "y1", "y2", Rational(1)}});
}

MetrizedComplex tate() { return canonical_complex(c2(), 0); }

MetrizedComplex genus2() {
  AugmentedMetricGraph g({{"v1", 0}, {"v2", 1}},
                         {{"e1", "v1", "v2", Rational(1)},
                          {"e2", "v1", "v2", Rational(1)}});
  return canonical_complex(g, 0);
}

HarmonicMorphism tate_cover() {
  AugmentedMetricGraph source_graph({{"v1'", 0}, {"v2'", 0}},
                                    {{"e1'", "v1'", "v2'", Rational(1, 2)},
                                     {"e2'", "v1'", "v2'", Rational(1, 2)}});
  MetrizedComplex source = canonical_complex(source_graph, 0);
  std::map<std::string, ResidueCurve> curves = source.curves();
  for (auto& [vid, curve] : curves) curve.automorphism_table = mu2_table(curve);
  source = MetrizedComplex(source_graph, std::move(curves), 0);

  return HarmonicMorphism(source, tate(),
                          {{"v1'", "v1"}, {"v2'", "v2"}},
                          {{"e1'", "e1"}, {"e2'", "e2"}},
                          {{"e1'", 2}, {"e2'", 2}},
                          {{"v1'", 2}, {"v2'", 2}});
}

CoveringRep split_double_cover() {
  return CoveringRep(c2(), 2, {{"e2", Perm::from_cycles("(1 2)", 2)}});
}

CoveringRep trivial_double_cover() { return CoveringRep(c2(), 2, {}); }

CoveringRep cyclic_triple_cover() {
  return CoveringRep(c2(), 3, {{"e2", Perm::from_cycles("(1 2 3)", 3)}});
}

CoveringRep s3_cover() {
  return CoveringRep(segment(), 3, {},
                     {{Perm::from_cycles("(1 2)", 3), "y1"},
                      {Perm::from_cycles("(2 3)", 3), "y2"}});
}

}  // namespace skelcov::fixtures
