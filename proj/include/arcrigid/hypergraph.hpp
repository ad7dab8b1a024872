#ifndef ARCRIGID_HYPERGRAPH_HPP
#define ARCRIGID_HYPERGRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arcrigid/vertex_set.hpp"

namespace arcrigid {

/**
 * Finite hypergraph: a vertex universe {0..n-1} with display labels and a set
 * of hyperedges.
 *
 * Hyperedges form a set, not a multiset. Duplicates passed to the constructor
 * are dropped (first occurrence wins, order otherwise preserved) and counted
 * in `duplicates_removed()`. The empty hyperedge is representable.
 */
class Hypergraph {
 public:
  Hypergraph(std::vector<std::string> labels, std::vector<VertexSet> edges);
  /// Labels default to "v0", "v1", ...
  Hypergraph(std::size_t n, std::vector<VertexSet> edges);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<VertexSet>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  std::optional<Vertex> find(std::string_view label) const;
  std::size_t duplicates_removed() const noexcept { return duplicates_removed_; }

  bool has_empty_edge() const;
  /// Set of vertices lying in no hyperedge.
  VertexSet isolated_vertices() const;

  /// Same universe and labels, different hyperedges.
  Hypergraph with_edges(std::vector<VertexSet> edges) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b);

 private:
  std::vector<std::string> labels_;
  std::vector<VertexSet> edges_;
  std::size_t duplicates_removed_ = 0;
};

std::vector<std::string> default_labels(std::size_t n);

enum class EdgeRelation { Overlap, StrictOverlap, Intersect, StrictIntersect };

std::string_view to_string(EdgeRelation rel);

/// A ≬ B: common vertex, neither contains the other.
bool overlaps(const VertexSet& a, const VertexSet& b);
/// A ≬* B: overlap whose union misses some vertex of the universe.
bool strictly_overlaps(const VertexSet& a, const VertexSet& b);
/// Nonempty intersection.
bool intersects(const VertexSet& a, const VertexSet& b);
/// A ⋈* B: strict overlap or inclusion. Both sets must be nonempty.
bool strictly_intersects(const VertexSet& a, const VertexSet& b);
/// Dispatch on `rel`. Empty sets never relate under StrictIntersect here.
bool related(EdgeRelation rel, const VertexSet& a, const VertexSet& b);

/// Partition of the universe into twin classes, each sorted ascending, the
/// classes ordered by their smallest member.
std::vector<std::vector<Vertex>> twin_classes(const Hypergraph& h);
bool is_twin_free(const Hypergraph& h);
/// Some pair of distinct twins, if any.
std::optional<std::pair<Vertex, Vertex>> find_twin_pair(const Hypergraph& h);

struct RelationComponents {
  /// Hyperedge indices per component, ascending; components ordered by
  /// their smallest hyperedge index.
  std::vector<std::vector<std::size_t>> components;
  VertexSet isolated_vertices;

  /// No isolated vertex and exactly one component.
  bool connected() const noexcept {
    return isolated_vertices.empty() && components.size() == 1;
  }
};

RelationComponents relation_components(const Hypergraph& h, EdgeRelation rel);

/// {V \ E : E in H}, deduplicated; empty complements are kept.
Hypergraph complement_hypergraph(const Hypergraph& h);

/// Drop hyperedges of size 0, 1, n-1 and n. Requires n >= 4.
Hypergraph strip_trivial_hyperedges(const Hypergraph& h);

/// Hypergraph without the complete hyperedge V (if present).
Hypergraph without_complete_edge(const Hypergraph& h);

}  // namespace arcrigid

#endif  // ARCRIGID_HYPERGRAPH_HPP
