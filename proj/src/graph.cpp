#include "arcrigid/graph.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace arcrigid {

Graph::Graph(std::size_t n) : Graph(default_labels(n)) {}

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxUniverse) throw Error(ErrorKind::TooLarge, "too many vertices");
  rows_.assign(labels_.size(), VertexSet(labels_.size()));
}

Graph::Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

std::optional<Vertex> Graph::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= size()) throw Error(ErrorKind::PreconditionViolated, "vertex out of range");
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorKind::PreconditionViolated, "loops are not allowed");
  rows_[u].set(v);
  rows_[v].set(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u].reset(v);
  rows_[v].reset(u);
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  VertexSet out = rows_.at(v);
  out.set(v);
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < size(); ++u) {
    rows_[u].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

Graph complement_graph(const Graph& g) {
  Graph out(g.labels());
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = u + 1; v < g.size(); ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  std::vector<std::string> labels;
  for (auto v : vertices) labels.push_back(g.label(v));
  Graph out(std::move(labels));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.adjacent(vertices[i], vertices[j])) out.add_edge(i, j);
    }
  }
  return out;
}

Bipartition bipartition(const Graph& g) {
  const std::size_t n = g.size();
  constexpr Vertex kNone = static_cast<Vertex>(-1);
  Bipartition out;
  out.side.assign(n, -1);
  std::vector<Vertex> parent(n, kNone);
  for (Vertex root = 0; root < n; ++root) {
    if (out.side[root] >= 0) continue;
    out.side[root] = 0;
    std::vector<Vertex> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Vertex x = queue[qi];
      for (Vertex y : g.neighbors(x).indices()) {
        if (out.side[y] < 0) {
          out.side[y] = 1 - out.side[x];
          parent[y] = x;
          queue.push_back(y);
        } else if (out.side[y] == out.side[x]) {
          // Both tree paths from the root meet at their lowest common
          // ancestor; together with x-y they close an odd cycle.
          std::vector<Vertex> px{x}, py{y};
          while (parent[px.back()] != kNone) px.push_back(parent[px.back()]);
          while (parent[py.back()] != kNone) py.push_back(parent[py.back()]);
          while (px.size() >= 2 && py.size() >= 2 && px[px.size() - 2] == py[py.size() - 2]) {
            px.pop_back();
            py.pop_back();
          }
          out.bipartite = false;
          out.side.clear();
          out.odd_cycle.assign(px.begin(), px.end());
          for (std::size_t i = py.size() - 1; i-- > 0;) out.odd_cycle.push_back(py[i]);
          std::reverse(out.odd_cycle.begin(), out.odd_cycle.end());
          return out;
        }
      }
    }
  }
  out.bipartite = true;
  return out;
}

bool is_bipartite(const Graph& g) { return bipartition(g).bipartite; }

VertexSet universal_vertices(const Graph& g) {
  VertexSet out(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.degree(v) + 1 == g.size()) out.set(v);
  }
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp{root};
    seen[root] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      g.neighbors(comp[i]).for_each([&](Vertex y) {
        if (!seen[y]) {
          seen[y] = true;
          comp.push_back(y);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<std::vector<Vertex>> twin_classes(const Graph& g) {
  std::map<VertexSet, std::size_t> class_of;
  std::vector<std::vector<Vertex>> classes;
  for (Vertex v = 0; v < g.size(); ++v) {
    auto [it, inserted] = class_of.emplace(g.closed_neighborhood(v), classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(v);
  }
  return classes;
}

bool is_twin_free(const Graph& g) { return twin_classes(g).size() == g.size(); }

namespace {

NeighborhoodHypergraph build(const Graph& g, bool closed) {
  std::vector<VertexSet> raw;
  raw.reserve(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    raw.push_back(closed ? g.closed_neighborhood(v) : g.neighbors(v));
  }
  Hypergraph h(g.labels(), raw);
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> index;
  for (std::size_t e = 0; e < h.edge_count(); ++e) index.emplace(h.edges()[e], e);
  std::vector<std::size_t> edge_of(g.size());
  for (Vertex v = 0; v < g.size(); ++v) edge_of[v] = index.at(raw[v]);
  return {std::move(h), std::move(edge_of)};
}

}  // namespace

NeighborhoodHypergraph closed_neighborhood_hypergraph(const Graph& g) { return build(g, true); }

NeighborhoodHypergraph open_neighborhood_hypergraph(const Graph& g) { return build(g, false); }

}  // namespace arcrigid
