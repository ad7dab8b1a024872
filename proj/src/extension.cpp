// Forced extension of arc placements along a strictly intersecting spanning
// tree of hyperedges, and the solvers built on it.

#include <map>
#include <queue>

#include "arcrigid/ordering.hpp"
#include "ordering_internal.hpp"

namespace arcrigid {

namespace {

std::size_t wrap(long long x, std::size_t m) {
  const long long mm = static_cast<long long>(m);
  long long r = x % mm;
  if (r < 0) r += mm;
  return static_cast<std::size_t>(r);
}

std::size_t common_positions(const Arc& x, const Arc& y) {
  return (x.positions() & y.positions()).count();
}

bool comparable(const VertexSet& a, const VertexSet& b) {
  return a.is_subset_of(b) || b.is_subset_of(a);
}

enum class Outcome { Found, NoOrdering, Inapplicable };

struct ExtensionResult {
  Outcome outcome;
  std::optional<CircularOrder> order;
};

/// Place the second seed hyperedge clockwise of the first.
Arc seed_second(const Arc& root_arc, const VertexSet& root, const VertexSet& s) {
  const std::size_t n = root.universe();
  const long long r = static_cast<long long>(root.count());
  const long long len = static_cast<long long>(s.count());
  if (strictly_overlaps(root, s)) {
    const long long c = static_cast<long long>((root & s).count());
    return Arc::from_start(n, wrap(r - c, n), s.count());
  }
  // Inclusion either way: share the clockwise endpoint of the root.
  (void)root_arc;
  return Arc::from_start(n, wrap(r - len, n), s.count());
}

/// Match position signatures against vertex signatures; same-signature
/// vertices fill their positions in ascending index order.
std::optional<CircularOrder> assign_vertices(std::size_t n, const std::vector<VertexSet>& edges,
                                             const std::vector<Arc>& arcs) {
  const std::size_t k = edges.size();
  std::vector<VertexSet> vsig(n, VertexSet(k));
  std::vector<VertexSet> psig(n, VertexSet(k));
  for (std::size_t e = 0; e < k; ++e) {
    edges[e].for_each([&](Vertex v) { vsig[v].set(e); });
    arcs[e].positions().for_each([&](std::size_t p) { psig[p].set(e); });
  }
  std::map<VertexSet, std::vector<Vertex>> by_vertex;
  std::map<VertexSet, std::vector<std::size_t>> by_position;
  for (std::size_t i = 0; i < n; ++i) {
    by_vertex[vsig[i]].push_back(i);
    by_position[psig[i]].push_back(i);
  }
  if (by_vertex.size() != by_position.size()) return std::nullopt;
  std::vector<Vertex> seq(n);
  for (auto vit = by_vertex.begin(), pit = by_position.begin(); vit != by_vertex.end();
       ++vit, ++pit) {
    if (vit->first != pit->first || vit->second.size() != pit->second.size()) {
      return std::nullopt;
    }
    for (std::size_t i = 0; i < vit->second.size(); ++i) seq[pit->second[i]] = vit->second[i];
  }
  return CircularOrder(std::move(seq));
}

bool relation_graph_connected(const std::vector<VertexSet>& edges, EdgeRelation rel,
                              std::vector<std::vector<std::size_t>>& adjacency) {
  const std::size_t k = edges.size();
  adjacency.assign(k, {});
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (related(rel, edges[i], edges[j])) {
        adjacency[i].push_back(j);
        adjacency[j].push_back(i);
      }
    }
  }
  std::vector<bool> seen(k, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (auto y : adjacency[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == k;
}

ExtensionResult solve_by_extension(const Hypergraph& h, OrderingMode mode) {
  const std::size_t n = h.size();
  std::vector<VertexSet> core;
  for (const auto& e : h.edges()) {
    const std::size_t k = e.count();
    const bool keep = mode == OrderingMode::All ? (k > 1 && k + 1 < n) : (k > 0 && k < n);
    if (keep) core.push_back(e);
  }
  if (core.empty()) {
    return {Outcome::Found, CircularOrder::identity(n)};
  }

  std::vector<std::vector<std::size_t>> adjacency;
  bool conclusive = false;
  if (mode == OrderingMode::All) {
    if (relation_graph_connected(core, EdgeRelation::StrictOverlap, adjacency)) {
      conclusive = true;
    } else if (!relation_graph_connected(core, EdgeRelation::StrictIntersect, adjacency)) {
      return {Outcome::Inapplicable, std::nullopt};
    }
  } else {
    if (!relation_graph_connected(core, EdgeRelation::StrictIntersect, adjacency)) {
      return {Outcome::Inapplicable, std::nullopt};
    }
    conclusive = true;
  }
  const Outcome on_failure = conclusive ? Outcome::NoOrdering : Outcome::Inapplicable;

  // Breadth-first spanning tree rooted at hyperedge 0.
  const std::size_t k = core.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(k, kNone);
  std::vector<std::size_t> bfs{0};
  std::vector<bool> seen(k, false);
  seen[0] = true;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    for (auto y : adjacency[bfs[i]]) {
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = bfs[i];
        bfs.push_back(y);
      }
    }
  }

  std::vector<std::optional<Arc>> placed(k);
  placed[0] = Arc::from_start(n, 0, core[0].count());
  try {
    if (k >= 2) {
      const std::size_t seed = bfs[1];
      placed[seed] = seed_second(*placed[0], core[0], core[seed]);
      for (std::size_t i = 2; i < bfs.size(); ++i) {
        const std::size_t x = bfs[i];
        const std::size_t b = parent[x];
        const std::size_t a = b == 0 ? seed : parent[b];
        placed[x] = extend_placement(*placed[a], *placed[b], core[a], core[b], core[x]);
      }
    }
  } catch (const Error&) {
    return {on_failure, std::nullopt};
  }

  std::vector<Arc> arcs;
  arcs.reserve(k);
  for (auto& p : placed) arcs.push_back(*p);
  auto order = assign_vertices(n, core, arcs);
  if (!order) return {on_failure, std::nullopt};

  bool ok = false;
  if (mode == OrderingMode::All) {
    ok = is_arc_ordering(h, *order);
  } else {
    try {
      ok = is_tight_arc_ordering(h, *order);
    } catch (const Error&) {
      ok = false;
    }
  }
  if (!ok) return {on_failure, std::nullopt};
  return {Outcome::Found, std::move(order)};
}

std::optional<CircularOrder> first_enumerated(const Hypergraph& h, OrderingMode mode,
                                              std::size_t cap) {
  std::optional<CircularOrder> found;
  detail::for_each_circular_class(h, mode, cap, [&](const std::vector<Vertex>& seq) {
    found.emplace(seq);
    return false;
  });
  return found;
}

std::optional<LinearOrder> first_enumerated_linear(const Hypergraph& h, OrderingMode mode,
                                                   std::size_t cap) {
  std::optional<LinearOrder> found;
  detail::for_each_linear_class(h, mode, cap, [&](const std::vector<Vertex>& seq) {
    found.emplace(seq);
    return false;
  });
  return found;
}

void reject_empty_edges(const Hypergraph& h) {
  if (h.has_empty_edge()) {
    throw Error(ErrorKind::EmptyHyperedge,
                "the empty hyperedge is not accepted by ordering entry points");
  }
}

/// H on V plus one extra vertex lying in no hyperedge. Its (tight) arc
/// orderings, cut at the extra vertex, are the (tight) interval orderings of H.
Hypergraph with_cut_vertex(const Hypergraph& h) {
  const std::size_t n = h.size();
  auto labels = h.labels();
  labels.push_back("#cut");
  std::vector<VertexSet> edges;
  edges.reserve(h.edge_count());
  for (const auto& e : h.edges()) {
    VertexSet wide(n + 1);
    e.for_each([&](Vertex v) { wide.set(v); });
    edges.push_back(std::move(wide));
  }
  return Hypergraph(std::move(labels), std::move(edges));
}

LinearOrder cut_at(const CircularOrder& order, Vertex cut) {
  const auto pos = order.positions();
  const std::size_t n = order.size();
  std::vector<Vertex> seq;
  seq.reserve(n - 1);
  for (std::size_t i = 1; i < n; ++i) seq.push_back(order[(pos[cut] + i) % n]);
  return LinearOrder(std::move(seq));
}

std::optional<LinearOrder> solve_linear(const Hypergraph& h, OrderingMode mode,
                                        const EnumerationCaps& caps) {
  reject_empty_edges(h);
  const auto augmented = with_cut_vertex(h);
  auto r = solve_by_extension(augmented, mode);
  if (r.outcome == Outcome::NoOrdering) return std::nullopt;
  if (r.outcome == Outcome::Found) {
    auto linear = cut_at(*r.order, h.size());
    const bool ok = mode == OrderingMode::All ? is_interval_ordering(h, linear)
                                              : is_tight_interval_ordering(h, linear);
    if (ok) return linear;
  }
  return first_enumerated_linear(h, mode, caps.linear);
}

}  // namespace

Arc extend_placement(const Arc& placed_a, const Arc& placed_b, const VertexSet& a,
                     const VertexSet& b, const VertexSet& h) {
  const std::size_t n = a.universe();
  if (b.universe() != n || h.universe() != n) {
    throw Error(ErrorKind::UniverseMismatch, "hyperedges over different universes");
  }
  if (placed_a.circle() != n || placed_b.circle() != n) {
    throw Error(ErrorKind::PreconditionViolated, "circle size must equal the universe size");
  }
  if (a.empty() || b.empty() || h.empty() || !strictly_intersects(a, b) ||
      !strictly_intersects(b, h)) {
    throw Error(ErrorKind::RelationViolated, "A, B, H must form a strictly intersecting path");
  }
  if (h == b) return placed_b;
  if (a == b) throw Error(ErrorKind::PreconditionViolated, "A and B must be distinct");
  if (!placed_a.is_proper() || !placed_b.is_proper() || placed_a.length() != a.count() ||
      placed_b.length() != b.count() || common_positions(placed_a, placed_b) != (a & b).count()) {
    throw Error(ErrorKind::PreconditionViolated, "placed arcs do not match A and B");
  }

  const std::size_t a_lo = placed_a.start();
  const std::size_t a_hi = placed_a.end();
  const std::size_t b_lo = placed_b.start();
  const std::size_t b_hi = placed_b.end();

  enum class Base { Overlap, BInsideA, AInsideB } base;
  bool base_clockwise = true;
  if (strictly_overlaps(a, b)) {
    base = Base::Overlap;
    // rho(B) meets rho(A) clockwise iff it contains a+.
    if (placed_b.contains(a_hi)) {
      base_clockwise = true;
    } else if (placed_b.contains(a_lo)) {
      base_clockwise = false;
    } else {
      throw Error(ErrorKind::PreconditionViolated, "overlapping arcs share no endpoint");
    }
  } else if (b.is_subset_of(a)) {
    base = Base::BInsideA;
    if (b_hi == a_hi) {
      base_clockwise = true;
    } else if (b_lo == a_lo) {
      base_clockwise = false;
    } else {
      throw Error(ErrorKind::PreconditionViolated, "nested arcs of A and B are not tight");
    }
  } else {
    base = Base::AInsideB;
    if (a_hi == b_hi) {
      base_clockwise = true;
    } else if (a_lo == b_lo) {
      base_clockwise = false;
    } else {
      throw Error(ErrorKind::PreconditionViolated, "nested arcs of A and B are not tight");
    }
  }

  const bool h_overlaps_b = strictly_overlaps(h, b);
  const bool h_inside_b = h.is_subset_of(b);
  // Condition (A\B and H\B comparable) recurs in several subcases.
  const bool tails_comparable = comparable(a - b, h - b);

  // `clockwise`: rho(H) holds b+ (overlap), or shares b+ (inclusion either way).
  bool clockwise = true;
  switch (base) {
    case Base::Overlap:
      if (h_overlaps_b) {
        clockwise = !tails_comparable;
      } else if (h_inside_b) {
        clockwise = !(a & b).is_subset_of(h);
      } else {
        clockwise = tails_comparable;
      }
      break;
    case Base::BInsideA:
      if (h_overlaps_b) {
        clockwise = !tails_comparable;
      } else if (h_inside_b) {
        clockwise = true;
      } else {
        clockwise = tails_comparable;
      }
      break;
    case Base::AInsideB:
      if (h_overlaps_b) {
        clockwise = (h & b).is_subset_of(a);
      } else if (h_inside_b) {
        clockwise = comparable(h, a);
      } else {
        clockwise = true;
      }
      break;
  }
  if (!base_clockwise) clockwise = !clockwise;

  const std::size_t h_size = h.count();
  if (h_size == n) return Arc::complete(n);
  const long long hs = static_cast<long long>(h_size);
  const long long c = static_cast<long long>((h & b).count());
  long long start = 0;
  if (h_overlaps_b) {
    start = clockwise ? static_cast<long long>(b_hi) - c + 1 : static_cast<long long>(b_lo) + c - hs;
  } else {
    start = clockwise ? static_cast<long long>(b_hi) - hs + 1 : static_cast<long long>(b_lo);
  }
  Arc out = Arc::from_start(n, wrap(start, n), h_size);
  if (common_positions(out, placed_b) != (h & b).count() ||
      common_positions(out, placed_a) != (h & a).count()) {
    throw Error(ErrorKind::Inconsistent, "no arc for H is consistent with A and B");
  }
  return out;
}

std::optional<CircularOrder> solve_arc_ordering(const Hypergraph& h, const EnumerationCaps& caps) {
  reject_empty_edges(h);
  if (h.size() <= 3) return CircularOrder::identity(h.size());
  auto r = solve_by_extension(h, OrderingMode::All);
  switch (r.outcome) {
    case Outcome::Found: return r.order;
    case Outcome::NoOrdering: return std::nullopt;
    case Outcome::Inapplicable: break;
  }
  return first_enumerated(h, OrderingMode::All, caps.circular);
}

std::optional<CircularOrder> solve_tight_arc_ordering(const Hypergraph& h,
                                                      const EnumerationCaps& caps) {
  reject_empty_edges(h);
  auto r = solve_by_extension(h, OrderingMode::TightOnly);
  switch (r.outcome) {
    case Outcome::Found: return r.order;
    case Outcome::NoOrdering: return std::nullopt;
    case Outcome::Inapplicable: break;
  }
  return first_enumerated(h, OrderingMode::TightOnly, caps.circular);
}

std::optional<LinearOrder> solve_interval_ordering(const Hypergraph& h,
                                                   const EnumerationCaps& caps) {
  return solve_linear(h, OrderingMode::All, caps);
}

std::optional<LinearOrder> solve_tight_interval_ordering(const Hypergraph& h,
                                                         const EnumerationCaps& caps) {
  return solve_linear(h, OrderingMode::TightOnly, caps);
}

}  // namespace arcrigid
