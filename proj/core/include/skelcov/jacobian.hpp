#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skelcov/bounds.hpp"
#include "skelcov/complex.hpp"
#include "skelcov/coverenum.hpp"
#include "skelcov/graph.hpp"
#include "skelcov/rational.hpp"

namespace skelcov {

struct EdgePoint {
  std::string edge;
  Rational position;  // distance from the edge's `from` endpoint
};

struct DivisorEntry {
  bool at_vertex = true;
  std::string vertex;
  EdgePoint point;
  long long coeff = 0;

  static DivisorEntry on_vertex(std::string id, long long c) {
    DivisorEntry e;
    e.at_vertex = true;
    e.vertex = std::move(id);
    e.coeff = c;
    return e;
  }
  static DivisorEntry on_edge(std::string edge, Rational pos, long long c) {
    DivisorEntry e;
    e.at_vertex = false;
    e.point = {std::move(edge), std::move(pos)};
    e.coeff = c;
    return e;
  }
};

using Divisor = std::vector<DivisorEntry>;

long long divisor_degree(const Divisor& d);

/// Cycle basis from the co-tree edges and the length-weighted cycle inner
/// product. genus = first Betti number; the period matrix is symmetric
/// positive definite with rational entries.
struct JacobianData {
  int genus = 0;
  std::vector<std::string> cotree;                 // basis indexing
  std::vector<std::map<std::string, int>> cycles;  // signed edge incidence
  std::vector<std::vector<Rational>> period;
};

/// Throws std::domain_error on disconnected input.
JacobianData tropical_jacobian(const AugmentedMetricGraph& graph);

/// The graph subdivided at every interior support point, with the divisor
/// moved onto vertices (zero coefficients dropped).
struct VertexDivisor {
  AugmentedMetricGraph graph;
  std::map<std::string, long long> coeffs;
};
VertexDivisor on_vertices(const AugmentedMetricGraph& graph, const Divisor& d);

struct DivisorClass {
  std::vector<Rational> torus_coords;  // in [0,1)^g, basis of the cycle lattice
  std::vector<Rational> pairing;       // period matrix applied to the coords
  bool zero = true;
};

/// Abel-Jacobi class of a degree-0 divisor, reduced modulo the period
/// lattice. Throws std::domain_error when deg != 0.
DivisorClass divisor_class(const AugmentedMetricGraph& graph, const Divisor& d);

/// A tropical meromorphic function with integer slopes, affine on each edge
/// of its (possibly subdivided) domain. slopes are read from -> to.
struct PiecewiseLinearFunction {
  AugmentedMetricGraph domain;
  std::map<std::string, long long> slopes;
  std::map<std::string, Rational> values;  // per vertex, base vertex at 0
};

/// Vertex coefficients of div(F): sum of outgoing slopes at each vertex.
std::map<std::string, long long> divisor_of(const PiecewiseLinearFunction& f);

/// The witness function when the divisor is principal.
std::optional<PiecewiseLinearFunction> principal_witness(
    const AugmentedMetricGraph& graph, const Divisor& d);

bool is_principal(const AugmentedMetricGraph& graph, const Divisor& d);

/// n-torsion of the toric / connected / full parts of the Jacobian read off
/// the skeleton: n^t, n^(t+2a), n^(2(t+a)) with t the first Betti number and
/// a the sum of the vertex genera. Requires gcd(n, residue char) = 1.
struct TorsionFiltration {
  unsigned long long toric = 1;
  unsigned long long connected = 1;
  unsigned long long total = 1;
  long long toric_rank = 0;    // t
  long long abelian_rank = 0;  // a
};
TorsionFiltration torsion_filtration(const MetrizedComplex& complex, long long n);

struct TateModuleRanks {
  long long toric = 0;      // t
  long long connected = 0;  // t + 2a
  long long total = 0;      // 2t + 2a
};
TateModuleRanks tate_module_ranks(const MetrizedComplex& complex);

/// Representatives of H^1(Gamma, Z/n) in co-tree normal form (zero on the
/// spanning tree), each materialized as a cyclic-voltage covering. The count
/// is n^t. Requires gcd(n, residue char) = 1.
struct CyclicCover {
  std::map<std::string, long long> labels;  // edge -> residue, tree edges 0
  CoveringRep rep;
};
std::vector<CyclicCover> cyclic_split_covers(const MetrizedComplex& complex, long long n,
                                             const Bounds& bounds = {});

/// n^exponent as a checked 64-bit value.
unsigned long long checked_power(long long n, long long exponent);

}  // namespace skelcov
