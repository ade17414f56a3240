#include "skelcov/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace skelcov {

AugmentedMetricGraph::AugmentedMetricGraph(std::vector<Vertex> vertices,
                                           std::vector<Edge> edges,
                                           std::vector<Leaf> leaves)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      leaves_(std::move(leaves)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_index_.emplace(vertices_[i].id, i).second)
      throw std::invalid_argument("duplicate vertex id '" + vertices_[i].id + "'");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].id.empty()) edges_[i].id = "e" + std::to_string(i + 1);
    if (!edge_index_.emplace(edges_[i].id, i).second)
      throw std::invalid_argument("duplicate edge id '" + edges_[i].id + "'");
  }
  for (std::size_t i = 0; i < leaves_.size(); ++i) {
    if (!leaf_index_.emplace(leaves_[i].label, i).second)
      throw std::invalid_argument("duplicate leaf label '" + leaves_[i].label + "'");
  }
}

const Vertex& AugmentedMetricGraph::vertex(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end())
    throw std::invalid_argument("unknown vertex '" + id + "'");
  return vertices_[it->second];
}

const Edge& AugmentedMetricGraph::edge(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end())
    throw std::invalid_argument("unknown edge '" + id + "'");
  return edges_[it->second];
}

const Leaf& AugmentedMetricGraph::leaf(const std::string& label) const {
  auto it = leaf_index_.find(label);
  if (it == leaf_index_.end())
    throw std::invalid_argument("unknown leaf '" + label + "'");
  return leaves_[it->second];
}

std::vector<HalfEdge> AugmentedMetricGraph::incident(const std::string& vertex_id) const {
  std::vector<HalfEdge> out;
  for (const auto& e : edges_)
    if (e.from == vertex_id || e.to == vertex_id)
      out.push_back({HalfEdge::Kind::Finite, e.id});
  for (const auto& l : leaves_)
    if (l.at == vertex_id) out.push_back({HalfEdge::Kind::Leaf, l.label});
  return out;
}

int AugmentedMetricGraph::valence(const std::string& vertex_id) const {
  return static_cast<int>(incident(vertex_id).size());
}

ValidationReport AugmentedMetricGraph::validate() const {
  ValidationReport report;
  for (const auto& v : vertices_) {
    if (v.genus < 0)
      report.add("negative-genus", "vertex '" + v.id + "' has genus " +
                                       std::to_string(v.genus));
  }
  for (const auto& e : edges_) {
    if (!has_vertex(e.from))
      report.add("dangling-edge", "edge '" + e.id + "' references unknown vertex '" +
                                      e.from + "'");
    if (!has_vertex(e.to))
      report.add("dangling-edge", "edge '" + e.id + "' references unknown vertex '" +
                                      e.to + "'");
    if (e.from == e.to)
      report.add("loop-edge", "edge '" + e.id + "' joins '" + e.from + "' to itself");
    if (!e.length.is_positive())
      report.add("non-positive length",
                 "edge '" + e.id + "' has length " + e.length.str());
  }
  for (const auto& l : leaves_) {
    if (!has_vertex(l.at))
      report.add("dangling-leaf", "leaf '" + l.label + "' anchored at unknown vertex '" +
                                      l.at + "'");
  }
  return report;
}

std::vector<int> AugmentedMetricGraph::component_labels() const {
  // Sorted vertex ids, so labels follow the smallest id of each component.
  std::vector<int> label(vertices_.size(), -1);
  std::vector<std::vector<std::size_t>> adjacency(vertices_.size());
  for (const auto& e : edges_) {
    auto fi = vertex_index_.find(e.from);
    auto ti = vertex_index_.find(e.to);
    if (fi == vertex_index_.end() || ti == vertex_index_.end() ||
        fi->second == ti->second)
      continue;
    adjacency[fi->second].push_back(ti->second);
    adjacency[ti->second].push_back(fi->second);
  }
  int next = 0;
  for (const auto& [id, start] : vertex_index_) {
    (void)id;
    if (label[start] != -1) continue;
    int c = next++;
    std::deque<std::size_t> queue{start};
    label[start] = c;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w : adjacency[u]) {
        if (label[w] == -1) {
          label[w] = c;
          queue.push_back(w);
        }
      }
    }
  }
  return label;
}

bool AugmentedMetricGraph::is_connected() const {
  auto labels = component_labels();
  for (int l : labels)
    if (l != 0) return false;
  return true;
}

std::vector<AugmentedMetricGraph> AugmentedMetricGraph::connected_components() const {
  auto labels = component_labels();
  int count = 0;
  for (int l : labels) count = std::max(count, l + 1);
  std::vector<std::vector<Vertex>> vs(count);
  std::vector<std::vector<Edge>> es(count);
  std::vector<std::vector<Leaf>> ls(count);
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    vs[labels[i]].push_back(vertices_[i]);
  for (const auto& e : edges_)
    es[labels[vertex_index_.at(e.from)]].push_back(e);
  for (const auto& l : leaves_)
    ls[labels[vertex_index_.at(l.at)]].push_back(l);
  std::vector<AugmentedMetricGraph> out;
  out.reserve(count);
  for (int c = 0; c < count; ++c)
    out.emplace_back(std::move(vs[c]), std::move(es[c]), std::move(ls[c]));
  return out;
}

int AugmentedMetricGraph::first_betti() const {
  auto labels = component_labels();
  int count = 0;
  for (int l : labels) count = std::max(count, l + 1);
  return static_cast<int>(edges_.size()) - static_cast<int>(vertices_.size()) + count;
}

std::vector<int> AugmentedMetricGraph::first_betti_per_component() const {
  std::vector<int> out;
  for (const auto& c : connected_components()) out.push_back(c.first_betti());
  return out;
}

int AugmentedMetricGraph::total_genus() const {
  if (vertices_.empty())
    throw std::domain_error("total genus of the empty graph is undefined");
  if (!is_connected())
    throw std::domain_error(
        "total genus of a disconnected graph is ambiguous; compute per component");
  int g = first_betti();
  for (const auto& v : vertices_) g += v.genus;
  return g;
}

std::vector<std::string> AugmentedMetricGraph::non_essential_vertices() const {
  std::vector<std::string> out;
  for (const auto& [id, idx] : vertex_index_)
    if (vertices_[idx].genus == 0 && valence(id) == 2) out.push_back(id);
  return out;
}

AugmentedMetricGraph AugmentedMetricGraph::subdivide(
    const std::string& edge_id, const Rational& pos, const std::string& new_vertex,
    std::optional<std::string> first_id, std::optional<std::string> second_id) const {
  const Edge& e = edge(edge_id);
  if (!(Rational(0) < pos && pos < e.length))
    throw std::invalid_argument("subdivision point " + pos.str() +
                                " not interior to edge '" + edge_id + "'");
  if (has_vertex(new_vertex))
    throw std::invalid_argument("vertex '" + new_vertex + "' already exists");
  std::vector<Vertex> vs = vertices_;
  vs.push_back({new_vertex, 0});
  std::vector<Edge> es;
  es.reserve(edges_.size() + 1);
  for (const auto& other : edges_) {
    if (other.id == edge_id) {
      es.push_back({first_id.value_or(edge_id + ".a"), e.from, new_vertex, pos});
      es.push_back(
          {second_id.value_or(edge_id + ".b"), new_vertex, e.to, e.length - pos});
    } else {
      es.push_back(other);
    }
  }
  return AugmentedMetricGraph(std::move(vs), std::move(es), leaves_);
}

bool operator==(const AugmentedMetricGraph& a, const AugmentedMetricGraph& b) {
  auto edge_eq = [](const Edge& x, const Edge& y) {
    return x.id == y.id && x.from == y.from && x.to == y.to && x.length == y.length;
  };
  auto va = a.vertices_, vb = b.vertices_;
  if (va.size() != vb.size() || a.edges_.size() != b.edges_.size() ||
      a.leaves_.size() != b.leaves_.size())
    return false;
  for (std::size_t i = 0; i < va.size(); ++i)
    if (va[i].id != vb[i].id || va[i].genus != vb[i].genus) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i)
    if (!edge_eq(a.edges_[i], b.edges_[i])) return false;
  for (std::size_t i = 0; i < a.leaves_.size(); ++i)
    if (a.leaves_[i].label != b.leaves_[i].label || a.leaves_[i].at != b.leaves_[i].at)
      return false;
  return true;
}

std::vector<std::string> spanning_forest(const AugmentedMetricGraph& g) {
  std::vector<std::string> tree;
  std::set<std::string> visited;
  std::vector<std::string> ids;
  for (const auto& v : g.vertices()) ids.push_back(v.id);
  std::sort(ids.begin(), ids.end());
  for (const auto& root : ids) {
    if (visited.count(root)) continue;
    visited.insert(root);
    std::deque<std::string> queue{root};
    while (!queue.empty()) {
      std::string u = queue.front();
      queue.pop_front();
      for (const auto& e : g.finite_edges()) {
        if (e.from != u && e.to != u) continue;
        const std::string& other = (e.from == u) ? e.to : e.from;
        if (visited.count(other)) continue;
        visited.insert(other);
        tree.push_back(e.id);
        queue.push_back(other);
      }
    }
  }
  return tree;
}

}  // namespace skelcov
