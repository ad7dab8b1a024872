#include "arcrigid/model.hpp"

#include <algorithm>
#include <numeric>
#include <type_traits>

namespace arcrigid {

namespace {

std::vector<std::string> labels_or_default(std::vector<std::string> labels, std::size_t n) {
  if (labels.empty()) return default_labels(n);
  if (labels.size() != n) {
    throw Error(ErrorKind::MalformedModel, "label count differs from the number of arcs");
  }
  return labels;
}

void check_range(std::size_t points, const std::vector<Endpoints>& ends) {
  for (const auto& e : ends) {
    if (e.a < 1 || e.a > points || e.b < 1 || e.b > points) {
      throw Error(ErrorKind::MalformedModel, "endpoint outside 1.." + std::to_string(points));
    }
  }
}

void check_sharp(std::size_t points, const std::vector<Endpoints>& ends) {
  if (points != 2 * ends.size()) {
    throw Error(ErrorKind::MalformedModel, "a sharp model has exactly 2n points");
  }
  std::vector<bool> used(points + 1, false);
  for (const auto& e : ends) {
    for (auto p : {e.a, e.b}) {
      if (used[p]) throw Error(ErrorKind::MalformedModel, "endpoints are not pairwise distinct");
      used[p] = true;
    }
  }
}

bool arc_contains_arc(const ArcModel& m, Vertex inner, Vertex outer) {
  const std::size_t pts = m.points();
  const auto lo = m.length(outer);
  const auto li = m.length(inner);
  if (lo == pts) return true;
  if (li == pts) return false;
  const auto& o = m.arc(outer);
  const auto& i = m.arc(inner);
  const std::size_t offset = (i.a + pts - o.a) % pts;
  return offset + li <= lo;
}

bool arcs_meet(const ArcModel& m, Vertex u, Vertex v) {
  return m.covers(u, m.arc(v).a) || m.covers(v, m.arc(u).a);
}

/// Renumber points so that every endpoint gets its own point.
std::vector<Endpoints> split_points(std::size_t points, const std::vector<Endpoints>& ends,
                                    const std::vector<std::size_t>& length) {
  const std::size_t n = ends.size();
  std::vector<std::vector<Vertex>> starts(points + 1), stops(points + 1);
  for (Vertex v = 0; v < n; ++v) {
    starts[ends[v].a].push_back(v);
    stops[ends[v].b].push_back(v);
  }
  std::vector<Endpoints> out(n);
  std::size_t next = 1;
  for (std::size_t p = 1; p <= points; ++p) {
    auto& s = starts[p];
    auto& t = stops[p];
    std::stable_sort(s.begin(), s.end(),
                     [&](Vertex x, Vertex y) { return length[x] < length[y]; });
    std::stable_sort(t.begin(), t.end(),
                     [&](Vertex x, Vertex y) { return length[x] > length[y]; });
    for (auto v : s) out[v].a = next++;
    for (auto v : t) out[v].b = next++;
  }
  return out;
}

void check_order_size(const Graph& g, std::size_t order_size) {
  if (g.size() != order_size) {
    throw Error(ErrorKind::UniverseMismatch, "order and graph have different vertex counts");
  }
}

}  // namespace

ArcModel::ArcModel(std::size_t points, std::vector<Endpoints> arcs,
                   std::vector<std::string> labels)
    : points_(points), arcs_(std::move(arcs)) {
  labels_ = labels_or_default(std::move(labels), arcs_.size());
  check_range(points_, arcs_);
}

bool ArcModel::covers(Vertex v, std::size_t p) const {
  const auto& e = arcs_.at(v);
  if (e.a <= e.b) return e.a <= p && p <= e.b;
  return p >= e.a || p <= e.b;
}

std::size_t ArcModel::length(Vertex v) const {
  const auto& e = arcs_.at(v);
  if (e.a <= e.b) return e.b - e.a + 1;
  return points_ - e.a + 1 + e.b;
}

IntervalModel::IntervalModel(std::size_t points, std::vector<Endpoints> intervals,
                             std::vector<std::string> labels)
    : points_(points), intervals_(std::move(intervals)) {
  labels_ = labels_or_default(std::move(labels), intervals_.size());
  check_range(points_, intervals_);
  for (const auto& e : intervals_) {
    if (e.a > e.b) throw Error(ErrorKind::MalformedModel, "interval with a > b");
  }
}

bool IntervalModel::covers(Vertex v, std::size_t p) const {
  const auto& e = intervals_.at(v);
  return e.a <= p && p <= e.b;
}

SharpArcModel::SharpArcModel(std::vector<Endpoints> arcs, std::vector<std::string> labels)
    : ArcModel(2 * arcs.size(), arcs, std::move(labels)) {
  if (arcs_.empty()) throw Error(ErrorKind::MalformedModel, "a model needs at least one arc");
  check_sharp(points_, arcs_);
}

SharpIntervalModel::SharpIntervalModel(std::vector<Endpoints> intervals,
                                       std::vector<std::string> labels)
    : IntervalModel(2 * intervals.size(), intervals, std::move(labels)) {
  if (intervals_.empty()) throw Error(ErrorKind::MalformedModel, "a model needs at least one interval");
  check_sharp(points_, intervals_);
}

Graph model_to_graph(const ArcModel& model) {
  Graph g(model.labels());
  for (Vertex u = 0; u < model.size(); ++u) {
    for (Vertex v = u + 1; v < model.size(); ++v) {
      if (arcs_meet(model, u, v)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph model_to_graph(const IntervalModel& model) {
  Graph g(model.labels());
  for (Vertex u = 0; u < model.size(); ++u) {
    for (Vertex v = u + 1; v < model.size(); ++v) {
      const auto& x = model.interval(u);
      const auto& y = model.interval(v);
      if (x.a <= y.b && y.a <= x.b) g.add_edge(u, v);
    }
  }
  return g;
}

bool is_proper(const ArcModel& model) {
  for (Vertex u = 0; u < model.size(); ++u) {
    for (Vertex v = 0; v < model.size(); ++v) {
      if (u != v && arc_contains_arc(model, u, v)) return false;
    }
  }
  return true;
}

bool is_proper(const IntervalModel& model) {
  for (Vertex u = 0; u < model.size(); ++u) {
    for (Vertex v = 0; v < model.size(); ++v) {
      const auto& x = model.interval(u);
      const auto& y = model.interval(v);
      if (u != v && y.a <= x.a && x.b <= y.b) return false;
    }
  }
  return true;
}

CircularOrder geometric_order(const SharpArcModel& model) {
  std::vector<Vertex> seq(model.size());
  std::iota(seq.begin(), seq.end(), Vertex{0});
  std::sort(seq.begin(), seq.end(),
            [&](Vertex x, Vertex y) { return model.arc(x).a < model.arc(y).a; });
  return CircularOrder(std::move(seq));
}

LinearOrder geometric_order(const SharpIntervalModel& model) {
  std::vector<Vertex> seq(model.size());
  std::iota(seq.begin(), seq.end(), Vertex{0});
  std::sort(seq.begin(), seq.end(),
            [&](Vertex x, Vertex y) { return model.interval(x).a < model.interval(y).a; });
  return LinearOrder(std::move(seq));
}

SharpArcModel sharpen(const ArcModel& model) {
  std::vector<std::size_t> length(model.size());
  for (Vertex v = 0; v < model.size(); ++v) length[v] = model.length(v);
  return SharpArcModel(split_points(model.points(), model.arcs(), length), model.labels());
}

SharpIntervalModel sharpen(const IntervalModel& model) {
  std::vector<std::size_t> length(model.size());
  for (Vertex v = 0; v < model.size(); ++v) {
    length[v] = model.interval(v).b - model.interval(v).a + 1;
  }
  return SharpIntervalModel(split_points(model.points(), model.intervals(), length),
                            model.labels());
}

SharpArcModel rotated(const SharpArcModel& model, std::size_t shift) {
  const std::size_t m = model.points();
  auto move = [&](std::size_t p) { return (p - 1 + shift) % m + 1; };
  std::vector<Endpoints> arcs;
  for (const auto& e : model.arcs()) arcs.push_back({move(e.a), move(e.b)});
  return SharpArcModel(std::move(arcs), model.labels());
}

SharpArcModel reflected(const SharpArcModel& model) {
  const std::size_t m = model.points();
  std::vector<Endpoints> arcs;
  for (const auto& e : model.arcs()) arcs.push_back({m + 1 - e.b, m + 1 - e.a});
  return SharpArcModel(std::move(arcs), model.labels());
}

SharpIntervalModel reflected(const SharpIntervalModel& model) {
  const std::size_t m = model.points();
  std::vector<Endpoints> out;
  for (const auto& e : model.intervals()) out.push_back({m + 1 - e.b, m + 1 - e.a});
  return SharpIntervalModel(std::move(out), model.labels());
}

bool models_equal_up_to_symmetry(const SharpArcModel& a, const SharpArcModel& b,
                                 bool allow_reflection) {
  if (a.size() != b.size()) return false;
  std::vector<SharpArcModel> bases{a};
  if (allow_reflection) bases.push_back(reflected(a));
  for (const auto& base : bases) {
    for (std::size_t s = 0; s < a.points(); ++s) {
      if (rotated(base, s).arcs() == b.arcs()) return true;
    }
  }
  return false;
}

bool models_equal_up_to_symmetry(const SharpIntervalModel& a, const SharpIntervalModel& b,
                                 bool allow_reflection) {
  if (a.size() != b.size()) return false;
  if (a.intervals() == b.intervals()) return true;
  return allow_reflection && reflected(a).intervals() == b.intervals();
}

SharpIntervalModel reconstruct_interval(const Graph& g, const LinearOrder& order) {
  check_order_size(g, order.size());
  const std::size_t n = g.size();
  std::vector<Endpoints> ends(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    std::size_t earlier_non_neighbors = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (!g.adjacent(order[j], v)) ++earlier_non_neighbors;
    }
    ends[v].a = (i + 1) + earlier_non_neighbors;
    ends[v].b = ends[v].a + 1 + g.degree(v);
  }
  std::optional<SharpIntervalModel> model;
  try {
    model.emplace(std::move(ends), g.labels());
  } catch (const Error&) {
    throw Error(ErrorKind::NotRealizable, "order is not a geometric order of a proper model");
  }
  if (!is_proper(*model) || model_to_graph(*model) != g || geometric_order(*model) != order) {
    throw Error(ErrorKind::NotRealizable, "order is not a geometric order of a proper model");
  }
  return *model;
}

SharpArcModel reconstruct_arc(const Graph& g, const CircularOrder& order) {
  check_order_size(g, order.size());
  const std::size_t n = g.size();
  const auto universal = universal_vertices(g);
  if (universal.count() >= 2) {
    throw Error(ErrorKind::TooManyUniversalVertices,
                "reconstruction needs at most one universal vertex");
  }
  auto not_realizable = [] {
    return Error(ErrorKind::NotRealizable, "order is not a geometric order of a proper model");
  };
  const auto pos = order.positions();

  // Clockwise and counter-clockwise closed neighbourhoods.
  std::vector<VertexSet> plus(n, VertexSet(n)), minus(n, VertexSet(n));
  for (Vertex v = 0; v < n; ++v) {
    if (universal.test(v)) continue;
    const auto closed = g.closed_neighborhood(v);
    plus[v].set(v);
    minus[v].set(v);
    for (std::size_t k = 1; k < n && closed.test(order[(pos[v] + k) % n]); ++k) {
      plus[v].set(order[(pos[v] + k) % n]);
    }
    for (std::size_t k = 1; k < n && closed.test(order[(pos[v] + n - k) % n]); ++k) {
      minus[v].set(order[(pos[v] + n - k) % n]);
    }
    if ((plus[v] | minus[v]) != closed) throw not_realizable();
  }
  if (auto u = universal.first(); u < n) {
    plus[u].set(u);
    minus[u].set(u);
    for (Vertex v = 0; v < n; ++v) {
      if (v == u) continue;
      if (plus[v].test(u)) minus[u].set(v);
      if (minus[v].test(u)) plus[u].set(v);
    }
  }

  const Vertex v1 = order[0];
  std::vector<Endpoints> ends(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const Vertex vi = order[i - 1];
    std::size_t a = 0;
    if (!plus[v1].test(vi)) {
      a = 2 + g.degree(v1);
      for (std::size_t j = 2; j <= i; ++j) {
        if (!plus[v1].test(order[j - 1])) ++a;
      }
      for (std::size_t j = 2; j < i; ++j) {
        if (!minus[vi].test(order[j - 1])) ++a;
      }
    } else {
      a = i + (minus[v1] - minus[vi]).count();
    }
    std::size_t b = a + 1 + g.degree(vi);
    if (b > 2 * n) b -= 2 * n;
    if (a < 1 || a > 2 * n || b < 1 || b > 2 * n) throw not_realizable();
    ends[vi] = {a, b};
  }

  std::optional<SharpArcModel> model;
  try {
    model.emplace(std::move(ends), g.labels());
  } catch (const Error&) {
    throw not_realizable();
  }
  if (!is_proper(*model) || model_to_graph(*model) != g || geometric_order(*model) != order) {
    throw not_realizable();
  }
  return *model;
}

Orientation::Orientation(Graph graph) : graph_(std::move(graph)) {
  out_.assign(graph_.size(), VertexSet(graph_.size()));
}

void Orientation::direct(Vertex u, Vertex v) {
  if (u >= graph_.size() || v >= graph_.size() || !graph_.adjacent(u, v)) {
    throw Error(ErrorKind::PreconditionViolated, "can only direct an existing edge");
  }
  out_[u].set(v);
  out_[v].reset(u);
}

VertexSet Orientation::in_neighbors(Vertex u) const {
  VertexSet out(graph_.size());
  for (Vertex w = 0; w < graph_.size(); ++w) {
    if (out_[w].test(u)) out.set(w);
  }
  return out;
}

bool Orientation::complete() const {
  for (auto [u, v] : graph_.edges()) {
    if (out_[u].test(v) == out_[v].test(u)) return false;
  }
  return true;
}

Orientation Orientation::reversed() const {
  Orientation r(graph_);
  for (Vertex u = 0; u < graph_.size(); ++u) {
    out_[u].for_each([&](Vertex v) { r.out_[v].set(u); });
  }
  return r;
}

namespace {

template <class Model>
Orientation orient_by_starts(const Model& model, const Graph& g) {
  Orientation d(g);
  auto start = [&](Vertex v) {
    if constexpr (std::is_same_v<Model, SharpArcModel>) {
      return model.arc(v).a;
    } else {
      return model.interval(v).a;
    }
  };
  for (auto [u, v] : g.edges()) {
    const bool uv = model.covers(u, start(v));
    const bool vu = model.covers(v, start(u));
    if (uv == vu) {
      throw Error(ErrorKind::AmbiguousDirection,
                  "adjacent arcs must contain exactly one start of each other");
    }
    if (uv) {
      d.direct(u, v);
    } else {
      d.direct(v, u);
    }
  }
  return d;
}

}  // namespace

Orientation round_orientation(const SharpArcModel& model) {
  return orient_by_starts(model, model_to_graph(model));
}

Orientation straight_orientation(const SharpIntervalModel& model) {
  return orient_by_starts(model, model_to_graph(model));
}

bool is_round_enumeration(const Orientation& d, const CircularOrder& order) {
  const auto& g = d.graph();
  check_order_size(g, order.size());
  if (!is_arc_ordering(closed_neighborhood_hypergraph(g).hypergraph, order)) {
    throw Error(ErrorKind::NotAnArcOrdering, "order is not an arc ordering of N[G]");
  }
  if (!universal_vertices(g).empty()) {
    throw Error(ErrorKind::UniversalVertex, "round enumerations need v- and v+ to exist");
  }
  if (!d.complete()) return false;
  const std::size_t n = g.size();
  const auto pos = order.positions();
  for (Vertex v = 0; v < n; ++v) {
    const auto in = d.in_neighbors(v);
    const auto& out = d.out_neighbors(v);
    for (std::size_t k = 1; k <= in.count(); ++k) {
      if (!in.test(order[(pos[v] + n - k) % n])) return false;
    }
    for (std::size_t k = 1; k <= out.count(); ++k) {
      if (!out.test(order[(pos[v] + k) % n])) return false;
    }
  }
  return true;
}

bool is_straight_enumeration(const Orientation& d, const LinearOrder& order) {
  const auto& g = d.graph();
  check_order_size(g, order.size());
  if (!is_interval_ordering(closed_neighborhood_hypergraph(g).hypergraph, order)) {
    throw Error(ErrorKind::NotAnIntervalOrdering, "order is not an interval ordering of N[G]");
  }
  if (!d.complete()) return false;
  const auto pos = order.positions();
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto in = d.in_neighbors(v);
    const auto& out = d.out_neighbors(v);
    if (in.count() > pos[v] || pos[v] + out.count() >= g.size()) return false;
    for (std::size_t k = 1; k <= in.count(); ++k) {
      if (!in.test(order[pos[v] - k])) return false;
    }
    for (std::size_t k = 1; k <= out.count(); ++k) {
      if (!out.test(order[pos[v] + k])) return false;
    }
  }
  return true;
}

}  // namespace arcrigid
