#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skelcov/rational.hpp"
#include "skelcov/validation.hpp"

namespace skelcov {

struct Vertex {
  std::string id;
  int genus = 0;
};

/// A finite edge between two distinct vertices, with a positive rational
/// length. Parallel edges are allowed, loops are not.
struct Edge {
  std::string id;
  std::string from;
  std::string to;
  Rational length;
};

/// An infinite ray toward a puncture / marked point, anchored at a vertex.
struct Leaf {
  std::string label;
  std::string at;
};

/// A half-edge at a vertex: either one end of a finite edge or a leaf ray.
/// Looplessness makes (vertex, edge id) unambiguous.
struct HalfEdge {
  enum class Kind { Finite, Leaf };
  Kind kind;
  std::string id;  // finite edge id or leaf label

  friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
  friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

/// A possibly disconnected metric graph over the rationals, with a genus
/// function on vertices and leaf rays toward punctures. Immutable after
/// construction; all operations are pure.
class AugmentedMetricGraph {
public:
  AugmentedMetricGraph() = default;
  AugmentedMetricGraph(std::vector<Vertex> vertices, std::vector<Edge> edges,
                       std::vector<Leaf> leaves = {});

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& finite_edges() const { return edges_; }
  const std::vector<Leaf>& leaf_edges() const { return leaves_; }

  bool has_vertex(const std::string& id) const { return vertex_index_.count(id) > 0; }
  const Vertex& vertex(const std::string& id) const;
  bool has_edge(const std::string& id) const { return edge_index_.count(id) > 0; }
  const Edge& edge(const std::string& id) const;
  const Leaf& leaf(const std::string& label) const;
  bool has_leaf(const std::string& label) const { return leaf_index_.count(label) > 0; }

  /// Half-edges incident to a vertex, finite ends first, in input order.
  std::vector<HalfEdge> incident(const std::string& vertex_id) const;

  /// Valence counting both finite ends and leaves.
  int valence(const std::string& vertex_id) const;

  ValidationReport validate() const;

  bool is_connected() const;

  /// Partition into connected components, ordered by smallest vertex id.
  /// Isolated vertices form their own components; leaves follow their anchor.
  std::vector<AugmentedMetricGraph> connected_components() const;

  /// First Betti number |E_f| - |V| + #components. Leaves do not count.
  int first_betti() const;
  std::vector<int> first_betti_per_component() const;

  /// beta + sum of vertex genera. Throws std::domain_error on disconnected
  /// input; use connected_components() and sum per component instead.
  int total_genus() const;

  /// Vertices of valence 2 and genus 0 (permitted, but not essential).
  std::vector<std::string> non_essential_vertices() const;

  /// Splits `edge_id` at distance `pos` from its `from` endpoint, inserting a
  /// genus-0 vertex `new_vertex`. The two halves are named `<id>.a` / `<id>.b`
  /// unless explicit names are given. Requires 0 < pos < length.
  AugmentedMetricGraph subdivide(const std::string& edge_id, const Rational& pos,
                                 const std::string& new_vertex,
                                 std::optional<std::string> first_id = {},
                                 std::optional<std::string> second_id = {}) const;

  friend bool operator==(const AugmentedMetricGraph&, const AugmentedMetricGraph&);

private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Leaf> leaves_;
  std::map<std::string, std::size_t> vertex_index_;
  std::map<std::string, std::size_t> edge_index_;
  std::map<std::string, std::size_t> leaf_index_;

  // component label per vertex, by traversal from the smallest vertex id
  std::vector<int> component_labels() const;
};

/// Deterministic spanning forest: BFS from the smallest vertex id of each
/// component, neighbors visited in edge input order. Returns edge ids.
std::vector<std::string> spanning_forest(const AugmentedMetricGraph& g);

}  // namespace skelcov
