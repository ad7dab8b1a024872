#include "arcrigid/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

namespace arcrigid {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

Hypergraph::Hypergraph(std::vector<std::string> labels, std::vector<VertexSet> edges)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw Error(ErrorKind::PreconditionViolated, "a hypergraph needs at least one vertex");
  }
  if (labels_.size() > kMaxUniverse) {
    throw Error(ErrorKind::TooLarge, "too many vertices");
  }
  std::unordered_set<VertexSet, VertexSetHash> seen;
  edges_.reserve(edges.size());
  for (auto& e : edges) {
    if (e.universe() != labels_.size()) {
      throw Error(ErrorKind::UniverseMismatch, "hyperedge over a different universe");
    }
    if (seen.insert(e).second) {
      edges_.push_back(std::move(e));
    } else {
      ++duplicates_removed_;
    }
  }
}

Hypergraph::Hypergraph(std::size_t n, std::vector<VertexSet> edges)
    : Hypergraph(default_labels(n), std::move(edges)) {}

std::optional<Vertex> Hypergraph::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

bool Hypergraph::has_empty_edge() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const VertexSet& e) { return e.empty(); });
}

VertexSet Hypergraph::isolated_vertices() const {
  VertexSet covered(size());
  for (const auto& e : edges_) covered |= e;
  return covered.complement();
}

Hypergraph Hypergraph::with_edges(std::vector<VertexSet> edges) const {
  return Hypergraph(labels_, std::move(edges));
}

bool operator==(const Hypergraph& a, const Hypergraph& b) {
  if (a.labels_ != b.labels_ || a.edges_.size() != b.edges_.size()) return false;
  auto x = a.edges_;
  auto y = b.edges_;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

std::string_view to_string(EdgeRelation rel) {
  switch (rel) {
    case EdgeRelation::Overlap: return "overlap";
    case EdgeRelation::StrictOverlap: return "strict-overlap";
    case EdgeRelation::Intersect: return "intersect";
    case EdgeRelation::StrictIntersect: return "strict-intersect";
  }
  return "?";
}

bool overlaps(const VertexSet& a, const VertexSet& b) {
  return a.intersects(b) && !a.is_subset_of(b) && !b.is_subset_of(a);
}

bool strictly_overlaps(const VertexSet& a, const VertexSet& b) {
  return overlaps(a, b) && (a | b).count() < a.universe();
}

bool intersects(const VertexSet& a, const VertexSet& b) { return a.intersects(b); }

bool strictly_intersects(const VertexSet& a, const VertexSet& b) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorKind::EmptyHyperedge, "strict intersection is defined for nonempty sets");
  }
  return strictly_overlaps(a, b) || a.is_subset_of(b) || b.is_subset_of(a);
}

bool related(EdgeRelation rel, const VertexSet& a, const VertexSet& b) {
  switch (rel) {
    case EdgeRelation::Overlap: return overlaps(a, b);
    case EdgeRelation::StrictOverlap: return strictly_overlaps(a, b);
    case EdgeRelation::Intersect: return intersects(a, b);
    case EdgeRelation::StrictIntersect:
      return !a.empty() && !b.empty() && strictly_intersects(a, b);
  }
  return false;
}

std::vector<std::vector<Vertex>> twin_classes(const Hypergraph& h) {
  const std::size_t n = h.size();
  // Membership signature of each vertex over the hyperedge list.
  std::vector<VertexSet> signature(n, VertexSet(h.edge_count()));
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    h.edges()[e].for_each([&](Vertex v) { signature[v].set(e); });
  }
  std::map<VertexSet, std::size_t> class_of;
  std::vector<std::vector<Vertex>> classes;
  for (Vertex v = 0; v < n; ++v) {
    auto [it, inserted] = class_of.emplace(signature[v], classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(v);
  }
  return classes;
}

bool is_twin_free(const Hypergraph& h) { return twin_classes(h).size() == h.size(); }

std::optional<std::pair<Vertex, Vertex>> find_twin_pair(const Hypergraph& h) {
  for (const auto& cls : twin_classes(h)) {
    if (cls.size() >= 2) return std::pair{cls[0], cls[1]};
  }
  return std::nullopt;
}

RelationComponents relation_components(const Hypergraph& h, EdgeRelation rel) {
  const auto& edges = h.edges();
  DisjointSets dsu(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (related(rel, edges[i], edges[j])) dsu.unite(i, j);
    }
  }
  RelationComponents out{{}, h.isolated_vertices()};
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [it, inserted] = slot.emplace(dsu.find(i), out.components.size());
    if (inserted) out.components.emplace_back();
    out.components[it->second].push_back(i);
  }
  return out;
}

Hypergraph complement_hypergraph(const Hypergraph& h) {
  std::vector<VertexSet> edges;
  edges.reserve(h.edge_count());
  for (const auto& e : h.edges()) edges.push_back(e.complement());
  return h.with_edges(std::move(edges));
}

Hypergraph strip_trivial_hyperedges(const Hypergraph& h) {
  const std::size_t n = h.size();
  if (n < 4) {
    throw Error(ErrorKind::PreconditionViolated,
                "stripping trivial hyperedges needs at least 4 vertices");
  }
  std::vector<VertexSet> kept;
  for (const auto& e : h.edges()) {
    const std::size_t k = e.count();
    if (k > 1 && k + 1 < n) kept.push_back(e);
  }
  return h.with_edges(std::move(kept));
}

Hypergraph without_complete_edge(const Hypergraph& h) {
  std::vector<VertexSet> kept;
  for (const auto& e : h.edges()) {
    if (!e.is_full()) kept.push_back(e);
  }
  return h.with_edges(std::move(kept));
}

}  // namespace arcrigid
