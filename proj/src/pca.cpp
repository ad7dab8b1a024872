#include "arcrigid/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace arcrigid {

namespace {

Hypergraph closed_hypergraph(const Graph& g) { return closed_neighborhood_hypergraph(g).hypergraph; }

struct Collapsed {
  Graph graph;
  std::vector<std::vector<Vertex>> classes;
};

Collapsed collapse_twins(const Graph& g) {
  auto classes = twin_classes(g);
  std::vector<Vertex> reps;
  for (const auto& c : classes) reps.push_back(c.front());
  return {induced_subgraph(g, reps), std::move(classes)};
}

std::vector<Vertex> expand(const std::vector<Vertex>& seq, const Collapsed& c) {
  std::vector<Vertex> out;
  for (auto x : seq) out.insert(out.end(), c.classes[x].begin(), c.classes[x].end());
  return out;
}

std::vector<Vertex> map_through(const std::vector<Vertex>& seq, const std::vector<Vertex>& to) {
  std::vector<Vertex> out;
  for (auto x : seq) out.push_back(to[x]);
  return out;
}

// Tight interval ordering of N[G] for a connected G. The hypergraph is then
// connected under intersection, which makes the solver conclusive.
std::optional<std::vector<Vertex>> connected_pi_order(const Graph& g, const EnumerationCaps& caps) {
  if (g.size() == 1) return std::vector<Vertex>{0};
  auto order = solve_tight_interval_ordering(closed_hypergraph(g), caps);
  if (!order) return std::nullopt;
  return order->sequence();
}

// Hypergraph on `side` whose hyperedges are the complement neighbourhoods
// of the vertices on the other side.
Hypergraph side_hypergraph(const Graph& co, const std::vector<Vertex>& side,
                           const std::vector<Vertex>& other) {
  std::vector<std::size_t> index(co.size(), 0);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < side.size(); ++i) {
    index[side[i]] = i;
    labels.push_back(co.label(side[i]));
  }
  std::vector<VertexSet> edges;
  for (auto w : other) {
    VertexSet e(side.size());
    co.neighbors(w).for_each([&](Vertex x) { e.set(index[x]); });
    edges.push_back(std::move(e));
  }
  return Hypergraph(std::move(labels), std::move(edges));
}

// For a connected graph whose complement is connected and bipartite: order
// each side by a tight interval ordering of its complement-neighbourhood
// hypergraph and glue the two sides together both ways.
std::optional<std::vector<CircularOrder>> bipartite_merges(const Graph& g,
                                                           const EnumerationCaps& caps) {
  const auto co = complement_graph(g);
  const auto bp = bipartition(co);
  std::vector<Vertex> u, w;
  for (Vertex v = 0; v < g.size(); ++v) (bp.side[v] == 0 ? u : w).push_back(v);
  auto ou = solve_tight_interval_ordering(side_hypergraph(co, u, w), caps);
  auto ow = solve_tight_interval_ordering(side_hypergraph(co, w, u), caps);
  if (!ou || !ow) return std::nullopt;
  auto su = map_through(ou->sequence(), u);
  auto sw = map_through(ow->sequence(), w);
  const auto h = closed_hypergraph(g);
  std::vector<CircularOrder> out;
  for (int flip = 0; flip < 2; ++flip) {
    std::vector<Vertex> seq = su;
    if (flip) std::reverse(sw.begin(), sw.end());
    seq.insert(seq.end(), sw.begin(), sw.end());
    CircularOrder o(std::move(seq));
    if (is_tight_arc_ordering(h, o)) out.push_back(std::move(o));
  }
  if (out.empty()) return std::nullopt;
  return out;
}

// Tight arc ordering of N[G] for a twin-free G.
std::optional<std::vector<Vertex>> twin_free_pca_order(const Graph& g,
                                                       const EnumerationCaps& caps) {
  const std::size_t n = g.size();
  if (n <= 2) {
    std::vector<Vertex> seq(n);
    std::iota(seq.begin(), seq.end(), Vertex{0});
    return seq;
  }
  const auto comps = connected_components(g);
  if (comps.size() > 1) {
    // Arcs of different components are disjoint, so none wraps around.
    std::vector<Vertex> seq;
    for (const auto& comp : comps) {
      auto part = connected_pi_order(induced_subgraph(g, comp), caps);
      if (!part) return std::nullopt;
      auto mapped = map_through(*part, comp);
      seq.insert(seq.end(), mapped.begin(), mapped.end());
    }
    return seq;
  }
  const auto co = complement_graph(g);
  const auto bp = bipartition(co);
  if (!bp.bipartite) {
    if (!universal_vertices(g).empty()) return std::nullopt;
    if (!strict_connectedness_of_neighborhoods(g)) return std::nullopt;
  } else if (is_connected(co)) {
    auto merges = bipartite_merges(g, caps);
    if (!merges) return std::nullopt;
    return merges->front().sequence();
  }
  auto order = solve_tight_arc_ordering(closed_hypergraph(g), caps);
  if (!order) return std::nullopt;
  return order->sequence();
}

std::size_t distance_cw(const std::vector<std::size_t>& pos, Vertex from, Vertex to) {
  const std::size_t n = pos.size();
  return (pos[to] + n - pos[from]) % n;
}

// x lies in the clockwise run from `from` to `to`.
bool in_run(const std::vector<std::size_t>& pos, Vertex x, Vertex from, Vertex to) {
  return distance_cw(pos, from, x) <= distance_cw(pos, from, to);
}

std::string names(const Graph& g, std::initializer_list<Vertex> vs) {
  std::string out;
  for (auto v : vs) {
    if (!out.empty()) out += ' ';
    out += g.label(v);
  }
  return out;
}

void require_pca_hypotheses(const Graph& g, const EnumerationCaps& caps, bool need_nonbipartite) {
  if (!is_twin_free(g)) throw Error(ErrorKind::PreconditionViolated, "graph has twins");
  if (!is_connected(g)) throw Error(ErrorKind::PreconditionViolated, "graph is not connected");
  if (need_nonbipartite && is_bipartite(complement_graph(g))) {
    throw Error(ErrorKind::PreconditionViolated, "complement is bipartite");
  }
  if (!recognize_pca(g, caps).is_pca) {
    throw Error(ErrorKind::PreconditionViolated, "graph is not PCA");
  }
}

struct Rng {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

void check_random_params(std::size_t n, double density) {
  if (n < 2) throw Error(ErrorKind::PreconditionViolated, "need at least 2 vertices");
  if (!(density > 0.0 && density <= 1.0)) {
    throw Error(ErrorKind::PreconditionViolated, "density must lie in (0,1]");
  }
}

// Ranks of 2n endpoint values on the circle (or line); value ties go to the
// lower index.
std::vector<Endpoints> rank_endpoints(const std::vector<double>& start,
                                      const std::vector<double>& stop) {
  const std::size_t n = start.size();
  std::vector<std::pair<double, std::size_t>> ev;
  for (std::size_t v = 0; v < n; ++v) {
    ev.emplace_back(start[v], 2 * v);
    ev.emplace_back(stop[v], 2 * v + 1);
  }
  std::sort(ev.begin(), ev.end());
  std::vector<Endpoints> out(n);
  for (std::size_t r = 0; r < ev.size(); ++r) {
    auto [value, id] = ev[r];
    (id % 2 == 0 ? out[id / 2].a : out[id / 2].b) = r + 1;
  }
  return out;
}

// Lengths jitter around density/2; each retry halves the jitter and the last
// one uses equal lengths, which can never nest.
constexpr int kAttempts = 8;

double jittered_length(Rng& rng, double base, int attempt) {
  const double jitter = attempt + 1 == kAttempts ? 0.0 : 0.5 * std::ldexp(1.0, -attempt);
  return base * (1.0 + jitter * (2.0 * rng.uniform() - 1.0));
}

}  // namespace

PcaRecognition recognize_pca(const Graph& g, const EnumerationCaps& caps) {
  if (g.size() == 0) throw Error(ErrorKind::PreconditionViolated, "empty graph");
  const auto c = collapse_twins(g);
  auto seq = twin_free_pca_order(c.graph, caps);
  if (!seq) return {};
  CircularOrder order(expand(*seq, c));
  if (!is_tight_arc_ordering(closed_hypergraph(g), order)) {
    throw Error(ErrorKind::Inconsistent, "expanded order is not tight");
  }
  return {true, std::move(order)};
}

ProperIntervalRecognition recognize_proper_interval(const Graph& g, const EnumerationCaps& caps) {
  if (g.size() == 0) throw Error(ErrorKind::PreconditionViolated, "empty graph");
  const auto c = collapse_twins(g);
  std::vector<Vertex> seq;
  for (const auto& comp : connected_components(c.graph)) {
    auto part = connected_pi_order(induced_subgraph(c.graph, comp), caps);
    if (!part) return {};
    auto mapped = map_through(*part, comp);
    seq.insert(seq.end(), mapped.begin(), mapped.end());
  }
  LinearOrder order(expand(seq, c));
  if (!is_tight_interval_ordering(closed_hypergraph(g), order)) {
    throw Error(ErrorKind::Inconsistent, "expanded order is not tight");
  }
  return {true, std::move(order)};
}

NeighborhoodArcs neighborhood_arcs(const Graph& g, const CircularOrder& order) {
  const std::size_t n = g.size();
  if (order.size() != n) {
    throw Error(ErrorKind::UniverseMismatch, "order and graph have different vertex counts");
  }
  if (!is_arc_ordering(closed_hypergraph(g), order)) {
    throw Error(ErrorKind::NotAnArcOrdering, "not an arc ordering of N[G]");
  }
  if (!universal_vertices(g).empty()) {
    throw Error(ErrorKind::UniversalVertex, "N[u] = V has no endpoints");
  }
  const auto pos = order.positions();
  NeighborhoodArcs out{std::vector<Vertex>(n), std::vector<Vertex>(n)};
  for (Vertex u = 0; u < n; ++u) {
    const auto closed = g.closed_neighborhood(u);
    std::size_t k = 1;
    while (closed.test(order[(pos[u] + k) % n])) ++k;
    out.plus[u] = order[(pos[u] + k - 1) % n];
    k = 1;
    while (closed.test(order[(pos[u] + n - k) % n])) ++k;
    out.minus[u] = order[(pos[u] + n - k + 1) % n];
  }
  return out;
}

bool StructuralReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

StructuralReport check_structural_lemmas(const Graph& g, const CircularOrder& order,
                                         const EnumerationCaps& caps) {
  if (is_bipartite(complement_graph(g))) {
    throw Error(ErrorKind::PreconditionViolated, "complement is bipartite");
  }
  if (!recognize_pca(g, caps).is_pca) {
    throw Error(ErrorKind::PreconditionViolated, "graph is not PCA");
  }
  const auto na = neighborhood_arcs(g, order);
  const std::size_t n = g.size();
  const auto pos = order.positions();
  const auto& mn = na.minus;
  const auto& pl = na.plus;

  StructuralReport report;
  auto add = [&](std::string name) -> LemmaCheck& {
    report.checks.push_back({std::move(name), true, {}});
    return report.checks.back();
  };
  auto fail = [](LemmaCheck& c, std::string what) {
    if (!c.passed) return;
    c.passed = false;
    c.counterexample = std::move(what);
  };

  auto& cliques = add("two-cliques");
  auto run_is_clique = [&](Vertex from, Vertex to) {
    const std::size_t len = distance_cw(pos, from, to) + 1;
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t j = i + 1; j < len; ++j) {
        const Vertex x = order[(pos[from] + i) % n];
        const Vertex y = order[(pos[from] + j) % n];
        if (!g.adjacent(x, y)) return false;
      }
    }
    return true;
  };
  for (Vertex u = 0; u < n; ++u) {
    if (!run_is_clique(mn[u], u)) fail(cliques, "[u-,u] for u = " + g.label(u));
    if (!run_is_clique(u, pl[u])) fail(cliques, "[u,u+] for u = " + g.label(u));
  }

  auto& tight = add("tight");
  if (!is_tight_arc_ordering(closed_hypergraph(g), order)) fail(tight, "order is not tight");

  auto& part1 = add("ca-order-1");
  auto& part2 = add("ca-order-2");
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      const bool forward = in_run(pos, v, u, pl[u]);
      if (forward != in_run(pos, u, mn[v], v)) fail(part1, "u v = " + names(g, {u, v}));
      if (forward && !(in_run(pos, mn[v], mn[u], u) && in_run(pos, pl[u], v, pl[v]))) {
        fail(part2, "u v = " + names(g, {u, v}));
      }
    }
  }

  // Adjacent pairs u, v with v right after u.
  auto& part3 = add("ca-order-3");
  for (std::size_t p = 0; p < n; ++p) {
    const Vertex u = order[p];
    const Vertex v = order[(p + 1) % n];
    if (!g.adjacent(u, v)) continue;
    const Vertex seq[] = {mn[u], mn[v], u, v, pl[u], pl[v]};
    bool ok = pl[v] != mn[u] && order[(pos[pl[v]] + 1) % n] != mn[u];
    for (int i = 0; i + 1 < 6 && ok; ++i) {
      ok = distance_cw(pos, mn[u], seq[i]) <= distance_cw(pos, mn[u], seq[i + 1]);
    }
    if (!ok) fail(part3, "u v = " + names(g, {u, v}));
  }
  return report;
}

bool strict_connectedness_of_neighborhoods(const Graph& g) {
  return relation_components(closed_hypergraph(g), EdgeRelation::StrictIntersect).connected();
}

std::string_view to_string(NrigidCase c) {
  switch (c) {
    case NrigidCase::SmallInstance: return "SmallInstance";
    case NrigidCase::NonBipartiteComplement: return "NonBipartiteComplement";
    case NrigidCase::BipartiteConnectedComplement: return "BipartiteConnectedComplement";
    case NrigidCase::Other: return "Other";
  }
  return "?";
}

NrigidVerdict nrigid_verdict(const Graph& g, const EnumerationCaps& caps) {
  NrigidVerdict out;
  if (g.size() <= 3) {
    out.kind = NrigidCase::SmallInstance;
    return out;
  }
  require_pca_hypotheses(g, caps, false);
  const auto co = complement_graph(g);
  const bool bip = is_bipartite(co);
  if (!bip) {
    out.kind = NrigidCase::NonBipartiteComplement;
    out.tight_orders.push_back(*recognize_pca(g, caps).tight_order);
    out.claimed_all_classes = 1;
    out.claimed_tight_classes = 1;
  } else if (is_connected(co)) {
    out.kind = NrigidCase::BipartiteConnectedComplement;
    auto merges = bipartite_merges(g, caps);
    if (!merges) throw Error(ErrorKind::Inconsistent, "no tight merge of the two sides");
    out.tight_orders = std::move(*merges);
    out.claimed_tight_classes = 2;
  } else {
    out.kind = NrigidCase::Other;
    out.tight_orders.push_back(*recognize_pca(g, caps).tight_order);
  }
  if (g.size() <= std::min(caps.circular, kEnumerationCeiling)) {
    const auto h = closed_hypergraph(g);
    out.oracle_all_classes = count_arc_orderings(h, OrderingMode::All, caps.circular);
    out.oracle_tight_classes = count_arc_orderings(h, OrderingMode::TightOnly, caps.circular);
  }
  return out;
}

bool theorem_ovconn_check(const Graph& g, const EnumerationCaps& caps) {
  require_pca_hypotheses(g, caps, true);
  const auto h = closed_hypergraph(g);
  std::vector<VertexSet> kept;
  for (const auto& e : h.edges()) {
    if (e.count() + 1 != g.size()) kept.push_back(e);
  }
  const auto reduced = h.with_edges(std::move(kept));
  return is_twin_free(reduced) &&
         relation_components(reduced, EdgeRelation::StrictOverlap).connected();
}

Graph gen_half_graph(std::size_t m) {
  if (m == 0) throw Error(ErrorKind::PreconditionViolated, "m must be positive");
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= m; ++i) labels.push_back("u" + std::to_string(i));
  for (std::size_t i = 1; i <= m; ++i) labels.push_back("v" + std::to_string(i));
  Graph g(std::move(labels));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) g.add_edge(i, m + j);
  }
  return g;
}

Graph gen_half_graph_complement(std::size_t m) { return complement_graph(gen_half_graph(m)); }

GeneratedPca gen_gk(std::size_t k) {
  if (k < 2) throw Error(ErrorKind::PreconditionViolated, "k must be at least 2");
  const std::size_t n = 3 * k - 1;
  auto u = [](std::size_t i) { return i - 1; };
  auto v = [k](std::size_t i) { return k + i - 1; };
  auto w = [k](std::size_t i) { return 2 * k + i - 1; };
  std::vector<std::string> labels(n);
  for (std::size_t i = 1; i <= k; ++i) {
    labels[u(i)] = "u" + std::to_string(i);
    labels[v(i)] = "v" + std::to_string(i);
    if (i < k) labels[w(i)] = "w" + std::to_string(i);
  }

  Graph g(labels);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) g.add_edge(x, y);
  }
  for (std::size_t i = 1; i <= k; ++i) {
    g.remove_edge(v(i), u(i));
    if (i < k) {
      g.remove_edge(w(i), u(i));
      g.remove_edge(w(i), u(i + 1));
    }
  }
  g.remove_edge(u(1), u(k));

  // Circle: u_1 .. u_k, then v_1 w_1 v_2 w_2 .. w_{k-1} v_k.
  std::vector<std::size_t> point(n);
  std::size_t next = 1;
  for (std::size_t i = 1; i <= k; ++i) point[u(i)] = next++;
  for (std::size_t i = 1; i <= k; ++i) {
    point[v(i)] = next++;
    if (i < k) point[w(i)] = next++;
  }
  std::vector<Endpoints> arcs(n);
  arcs[u(1)] = {point[u(1)], point[u(k - 1)]};
  arcs[v(1)] = {point[v(1)], point[v(k)]};
  arcs[w(1)] = {point[w(1)], point[v(k)]};
  for (std::size_t i = 2; i <= k; ++i) {
    arcs[u(i)] = {point[u(i)], point[v(i - 1)]};
    arcs[v(i)] = {point[v(i)], point[u(i - 1)]};
    if (i < k) arcs[w(i)] = {point[w(i)], point[u(i - 1)]};
  }
  return {std::move(g), sharpen(ArcModel(n, std::move(arcs), labels))};
}

Graph gen_fig_example() {
  Graph g(std::vector<std::string>{"a", "b", "c", "x", "y", "z"});
  const std::pair<const char*, const char*> edges[] = {
      {"a", "b"}, {"a", "c"}, {"b", "c"}, {"c", "x"},
      {"x", "y"}, {"a", "y"}, {"a", "z"}, {"y", "z"}};
  for (auto [x, y] : edges) g.add_edge(*g.find(x), *g.find(y));
  return g;
}

GeneratedPca gen_random_pca(std::size_t n, double density, std::uint64_t seed,
                            const RandomPcaOptions& options) {
  check_random_params(n, density);
  Rng rng{seed};
  const double base = density / 2.0;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<double> start(n), stop(n);
    for (std::size_t i = 0; i < n; ++i) {
      start[i] = rng.uniform();
      stop[i] = std::fmod(start[i] + jittered_length(rng, base, attempt), 1.0);
    }
    SharpArcModel model(rank_endpoints(start, stop));
    if (!is_proper(model)) continue;
    Graph g = model_to_graph(model);
    if (!options.twin_free || is_twin_free(g)) return {std::move(g), std::move(model)};
    std::vector<Vertex> reps;
    std::vector<Endpoints> arcs;
    for (const auto& c : twin_classes(g)) {
      reps.push_back(c.front());
      arcs.push_back(model.arc(c.front()));
    }
    auto reduced = sharpen(ArcModel(2 * n, std::move(arcs), default_labels(reps.size())));
    Graph rg = model_to_graph(reduced);
    return {std::move(rg), std::move(reduced)};
  }
  throw Error(ErrorKind::Inconsistent, "equal-length arcs nested");
}

GeneratedProperInterval gen_random_proper_interval(std::size_t n, double density,
                                                   std::uint64_t seed) {
  check_random_params(n, density);
  Rng rng{seed};
  const double base = density / 2.0;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<double> start(n), stop(n);
    for (std::size_t i = 0; i < n; ++i) {
      start[i] = rng.uniform();
      stop[i] = start[i] + jittered_length(rng, base, attempt);
    }
    SharpIntervalModel model(rank_endpoints(start, stop));
    if (!is_proper(model)) continue;
    Graph g = model_to_graph(model);
    return {std::move(g), std::move(model)};
  }
  throw Error(ErrorKind::Inconsistent, "equal-length intervals nested");
}

}  // namespace arcrigid
