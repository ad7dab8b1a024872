#ifndef ARCRIGID_GRAPH_HPP
#define ARCRIGID_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arcrigid/hypergraph.hpp"

namespace arcrigid {

/// Simple undirected graph with bitset adjacency rows and display labels.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph; labels default to "v0", "v1", ...
  explicit Graph(std::size_t n);
  explicit Graph(std::vector<std::string> labels);
  Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  std::optional<Vertex> find(std::string_view label) const;

  /// Throws PreconditionViolated on loops or out-of-range vertices.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  bool adjacent(Vertex u, Vertex v) const { return rows_.at(u).test(v); }
  /// Open neighborhood N(v).
  const VertexSet& neighbors(Vertex v) const { return rows_.at(v); }
  /// Closed neighborhood N[v].
  VertexSet closed_neighborhood(Vertex v) const;
  std::size_t degree(Vertex v) const { return rows_.at(v).count(); }
  std::size_t edge_count() const;
  /// Edges as pairs u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::string> labels_;
  std::vector<VertexSet> rows_;
};

Graph complement_graph(const Graph& g);
/// Subgraph induced by `vertices` (in the given order); labels carry over.
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

struct Bipartition {
  bool bipartite = false;
  /// Colour 0/1 per vertex when bipartite.
  std::vector<int> side;
  /// Closed walk of odd length (first vertex not repeated) otherwise.
  std::vector<Vertex> odd_cycle;
};

Bipartition bipartition(const Graph& g);
bool is_bipartite(const Graph& g);
VertexSet universal_vertices(const Graph& g);
/// Vertex sets of the connected components, each ascending, ordered by
/// smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Classes of vertices with equal closed neighborhoods.
std::vector<std::vector<Vertex>> twin_classes(const Graph& g);
bool is_twin_free(const Graph& g);

/// A neighborhood hypergraph plus, per vertex, the index of its hyperedge
/// after deduplication (twins share one).
struct NeighborhoodHypergraph {
  Hypergraph hypergraph;
  std::vector<std::size_t> edge_of_vertex;
};

NeighborhoodHypergraph closed_neighborhood_hypergraph(const Graph& g);
NeighborhoodHypergraph open_neighborhood_hypergraph(const Graph& g);

}  // namespace arcrigid

#endif  // ARCRIGID_GRAPH_HPP
