// Acceptance run: one PASS/FAIL line per criterion. Oracles come from
// mask_oracle.hpp and small test-side checks below, never from the library.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "arcrigid/error.hpp"
#include "arcrigid/graph.hpp"
#include "arcrigid/model.hpp"
#include "arcrigid/pca.hpp"
#include "arcrigid/rigidity.hpp"
#include "mask_oracle.hpp"

using namespace arcrigid;
using maskoracle::Mask;

namespace {

using Rng = std::mt19937_64;

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Frozen after the first run: non-tight arc ordering classes of N[half graph].
constexpr std::size_t kHalfNonTight3 = 6;
constexpr std::size_t kHalfNonTight4 = 30;

std::string seq_text(const std::vector<int>& s) {
  std::string out;
  for (int v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

std::string edges_text(const maskoracle::Hyper& h) {
  std::ostringstream out;
  out << "n=" << h.n << " edges";
  for (Mask e : h.edges) out << ' ' << std::hex << e << std::dec;
  return out.str();
}

// ---- hypergraph corpus, n in 4..7 ----

struct HyperInstance {
  Hypergraph h;
  maskoracle::Hyper m;
  maskoracle::Classes arcs;
};

Hypergraph random_arcs(Rng& rng, std::size_t n, std::size_t edges, std::size_t lo, std::size_t hi) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<std::size_t> pos(0, n - 1), len(lo, hi);
  std::vector<VertexSet> es;
  for (std::size_t i = 0; i < edges; ++i) {
    VertexSet e(n);
    const auto s = pos(rng), l = len(rng);
    for (std::size_t j = 0; j < l; ++j) e.set(perm[(s + j) % n]);
    es.push_back(e);
  }
  return Hypergraph(n, std::move(es));
}

std::vector<HyperInstance> hyper_corpus(std::size_t count) {
  Rng rng(20240601);
  std::vector<HyperInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 4 + i % 4;
    std::uniform_int_distribution<std::size_t> edges(1, 2 * n);
    // Half the instances avoid trivial sizes so that connectivity hypotheses hold often.
    auto h = i % 2 ? random_arcs(rng, n, edges(rng), 1, n) : random_arcs(rng, n, edges(rng), 2, n - 2);
    auto m = maskoracle::from_library(h);
    auto arcs = maskoracle::arc_classes(m);
    out.push_back({std::move(h), std::move(m), std::move(arcs)});
  }
  return out;
}

Outcome quilliot_equivalence(const std::vector<HyperInstance>& corpus) {
  std::size_t bad = 0, unique = 0;
  std::string first;
  for (const auto& inst : corpus) {
    const bool oracle = inst.arcs.all.size() == 1;
    const bool q = quilliot_unique(inst.h);
    const bool r = arc_rigidity(inst.h).status == RigidityStatus::UniqueArc;
    unique += oracle;
    if (inst.arcs.all.empty() || q != oracle || r != oracle) {
      if (!bad++) {
        first = edges_text(inst.m) + " oracle=" + std::to_string(inst.arcs.all.size()) +
                " quilliot=" + std::to_string(q) + " verdict=" + std::to_string(r);
      }
    }
  }
  return {bad == 0, std::to_string(corpus.size()) + " CA hypergraphs, " + std::to_string(unique) +
                        " unique, " + std::to_string(bad) + " discrepancies" +
                        (bad ? "; first: " + first : "")};
}

Outcome unique_representation(const std::vector<HyperInstance>& corpus) {
  std::size_t tested = 0, bad = 0;
  std::string first;
  for (const auto& inst : corpus) {
    const auto& m = inst.m;
    if (!maskoracle::twin_free(m) || !maskoracle::connected_under(m, maskoracle::strict_overlap(m.n))) {
      continue;
    }
    ++tested;
    if (inst.arcs.all.size() != 1 && !bad++) {
      first = edges_text(m) + " classes=" + std::to_string(inst.arcs.all.size());
    }
  }
  return {bad == 0 && tested > 0, std::to_string(tested) + " twin-free strictly overlap-connected, " +
                                      std::to_string(bad) + " violations" +
                                      (bad ? "; first: " + first : "")};
}

Outcome tight_at_most_one(const std::vector<HyperInstance>& corpus) {
  std::size_t linear = 0, circular = 0, bad = 0;
  std::string first;
  for (const auto& inst : corpus) {
    const auto& m = inst.m;
    if (!maskoracle::twin_free(m)) continue;
    if (maskoracle::connected_under(m, maskoracle::intersect)) {
      ++linear;
      const auto n = maskoracle::interval_classes(m).tight.size();
      if (n > 1 && !bad++) first = edges_text(m) + " tight interval classes=" + std::to_string(n);
    }
    maskoracle::Hyper proper{m.n, {}};
    for (Mask e : m.edges) {
      if (e != maskoracle::full(m.n)) proper.edges.push_back(e);
    }
    if (maskoracle::connected_under(proper, maskoracle::strict_intersect(m.n))) {
      ++circular;
      const auto n = inst.arcs.tight.size();
      if (n > 1 && !bad++) first = edges_text(m) + " tight arc classes=" + std::to_string(n);
    }
  }
  return {bad == 0 && linear > 0 && circular > 0,
          std::to_string(linear) + " connected (linear), " + std::to_string(circular) +
              " strictly connected (circular), " + std::to_string(bad) + " violations" +
              (bad ? "; first: " + first : "")};
}

// ---- PCA graph corpus, n in 4..9 ----

enum class Case { NonBipartite, BipartiteConnected, BipartiteDisconnected };

struct GraphInstance {
  std::string name;
  Graph g;
  maskoracle::Hyper closed;
  maskoracle::Classes arcs;
  Case kind;
  /// The model the generator built the graph from, when there is one.
  std::optional<SharpArcModel> source;
};

/// Two-colours the complement by BFS over non-adjacent pairs.
Case complement_case(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<int> colour(n, -1);
  std::size_t parts = 0;
  bool bipartite = true;
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    ++parts;
    colour[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v) {
        if (v == u || g.adjacent(u, v)) continue;
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          stack.push_back(v);
        } else if (colour[v] == colour[u]) {
          bipartite = false;
        }
      }
    }
  }
  if (!bipartite) return Case::NonBipartite;
  return parts == 1 ? Case::BipartiteConnected : Case::BipartiteDisconnected;
}

bool graph_connected(const Graph& g) {
  std::vector<bool> seen(g.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (!seen[v] && g.adjacent(u, v)) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == g.size();
}

bool distinct_closed_neighborhoods(const maskoracle::Hyper& closed) {
  auto e = closed.edges;
  std::sort(e.begin(), e.end());
  return std::adjacent_find(e.begin(), e.end()) == e.end();
}

void add_graph(std::vector<GraphInstance>& out, std::string name, Graph g,
               std::optional<SharpArcModel> source = std::nullopt) {
  auto closed = maskoracle::closed_neighborhoods(g);
  auto arcs = maskoracle::arc_classes(closed);
  const auto kind = complement_case(g);
  out.push_back({std::move(name), std::move(g), std::move(closed), std::move(arcs), kind, std::move(source)});
}

std::vector<GraphInstance> pca_corpus(std::size_t count) {
  std::vector<GraphInstance> out;
  for (std::size_t m = 2; m <= 4; ++m) add_graph(out, "half-complement " + std::to_string(m), gen_half_graph_complement(m));
  for (std::size_t k = 2; k <= 3; ++k) {
    auto gk = gen_gk(k);
    add_graph(out, "gk " + std::to_string(k), std::move(gk.graph), std::move(gk.model));
  }
  add_graph(out, "fig-example", gen_fig_example());
  Rng rng(77);
  std::uniform_int_distribution<std::size_t> size(4, 9);
  std::uniform_real_distribution<double> density(0.15, 0.95);
  auto in_scope = [&] {
    return std::count_if(out.begin(), out.end(),
                         [](const GraphInstance& i) { return i.kind != Case::BipartiteDisconnected; });
  };
  for (std::uint64_t seed = 1; static_cast<std::size_t>(in_scope()) < count; ++seed) {
    auto gen = gen_random_pca(size(rng), density(rng), seed, RandomPcaOptions{true});
    const auto& g = gen.graph;
    if (g.size() < 4 || g.size() > 9 || !graph_connected(g)) continue;
    if (!distinct_closed_neighborhoods(maskoracle::closed_neighborhoods(g))) continue;
    add_graph(out, "random-pca seed " + std::to_string(seed), std::move(gen.graph), std::move(gen.model));
  }
  return out;
}

Outcome nrigid(const std::vector<GraphInstance>& corpus) {
  std::size_t nonbip = 0, bip = 0, other = 0, bad = 0;
  std::string first;
  auto fail = [&](const GraphInstance& inst, const std::string& what) {
    if (!bad++) first = inst.name + ": " + what;
  };
  for (const auto& inst : corpus) {
    const auto all = inst.arcs.all.size(), tight = inst.arcs.tight.size();
    const auto v = nrigid_verdict(inst.g);
    if (inst.kind == Case::NonBipartite) {
      ++nonbip;
      if (all != 1 || tight != 1) fail(inst, "classes all=" + std::to_string(all) + " tight=" + std::to_string(tight));
      if (v.kind != NrigidCase::NonBipartiteComplement) fail(inst, "library case differs");
    } else if (inst.kind == Case::BipartiteConnected) {
      ++bip;
      if (tight != 2) fail(inst, "tight classes=" + std::to_string(tight));
      if (v.kind != NrigidCase::BipartiteConnectedComplement) fail(inst, "library case differs");
    } else {
      ++other;
      continue;
    }
    if (v.claimed_tight_classes && *v.claimed_tight_classes != tight) fail(inst, "claimed tight count differs");
    if (v.claimed_all_classes && *v.claimed_all_classes != all) fail(inst, "claimed class count differs");
  }
  return {bad == 0 && nonbip + bip >= 1000 && nonbip > 0 && bip > 0,
          std::to_string(corpus.size()) + " graphs (" + std::to_string(nonbip) + " non-bipartite, " +
              std::to_string(bip) + " bipartite connected, " + std::to_string(other) +
              " other complements), " + std::to_string(bad) + " violations" +
              (bad ? "; first: " + first : "")};
}

/// N[G] minus its hyperedges of size n-1 is twin-free and strictly
/// overlap-connected.
bool stripped_ovconn(const Graph& g) {
  const auto closed = maskoracle::closed_neighborhoods(g);
  maskoracle::Hyper stripped{closed.n, {}};
  for (Mask e : closed.edges) {
    if (std::popcount(e) != closed.n - 1) stripped.edges.push_back(e);
  }
  return maskoracle::twin_free(stripped) &&
         maskoracle::connected_under(stripped, maskoracle::strict_overlap(closed.n));
}

Outcome ovconn(const std::vector<GraphInstance>& corpus) {
  std::vector<std::pair<std::string, Graph>> cases;
  for (const auto& inst : corpus) {
    if (inst.kind == Case::NonBipartite) cases.emplace_back(inst.name, inst.g);
  }
  for (std::size_t k = 2; k <= 5; ++k) cases.emplace_back("gk " + std::to_string(k), gen_gk(k).graph);
  cases.emplace_back("fig-example", gen_fig_example());
  std::size_t bad = 0;
  std::string first;
  for (const auto& [name, g] : cases) {
    const bool oracle = stripped_ovconn(g);
    bool ok = oracle;
    if (complement_case(g) == Case::NonBipartite) ok = ok && theorem_ovconn_check(g) == oracle;
    if (!ok && !bad++) first = name;
  }
  return {bad == 0, std::to_string(cases.size()) + " instances, " + std::to_string(bad) + " violations" +
                        (bad ? "; first: " + first : "")};
}

// ---- models ----

/// Sharp proper arc model from a random start/end word; the k-th start is
/// paired with the (k+r)-th end, and vertices are relabelled at random.
std::optional<SharpArcModel> random_arc_model(Rng& rng, std::size_t n) {
  std::vector<bool> word(2 * n, false);
  std::fill(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(n), true);
  std::shuffle(word.begin(), word.end(), rng);
  std::vector<std::size_t> starts, ends;
  for (std::size_t p = 0; p < word.size(); ++p) (word[p] ? starts : ends).push_back(p + 1);
  const std::size_t r = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), Vertex{0});
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Endpoints> arcs(n);
  for (std::size_t k = 0; k < n; ++k) arcs[label[k]] = {starts[k], ends[(k + r) % n]};
  SharpArcModel m(std::move(arcs));
  if (!is_proper(m)) return std::nullopt;
  return m;
}

std::optional<SharpIntervalModel> random_interval_model(Rng& rng, std::size_t n) {
  std::vector<bool> word(2 * n, false);
  std::fill(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(n), true);
  std::shuffle(word.begin(), word.end(), rng);
  std::vector<std::size_t> starts, ends;
  for (std::size_t p = 0; p < word.size(); ++p) (word[p] ? starts : ends).push_back(p + 1);
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), Vertex{0});
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Endpoints> ivs(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (starts[k] > ends[k]) return std::nullopt;
    ivs[label[k]] = {starts[k], ends[k]};
  }
  return SharpIntervalModel(std::move(ivs));
}

std::size_t universal_count(const Graph& g) {
  std::size_t c = 0;
  for (std::size_t v = 0; v < g.size(); ++v) c += g.degree(v) + 1 == g.size();
  return c;
}

Outcome reconstruction_roundtrip() {
  Rng rng(4242);
  std::uniform_int_distribution<std::size_t> size(1, 32);
  const std::size_t target = 10000;
  std::size_t arcs = 0, intervals = 0, bad = 0;
  std::string first;
  while (arcs < target) {
    auto m = random_arc_model(rng, size(rng));
    if (!m) continue;
    const auto g = model_to_graph(*m);
    if (universal_count(g) > 1) continue;
    ++arcs;
    try {
      if (!models_equal_up_to_symmetry(reconstruct_arc(g, geometric_order(*m)), *m, false) && !bad++) {
        first = "arc model n=" + std::to_string(m->size());
      }
    } catch (const Error& e) {
      if (!bad++) first = std::string("arc model: ") + e.what();
    }
  }
  while (intervals < target) {
    auto m = random_interval_model(rng, size(rng));
    if (!m) continue;
    const auto g = model_to_graph(*m);
    if (universal_count(g) > 1) continue;
    ++intervals;
    try {
      if (reconstruct_interval(g, geometric_order(*m)).intervals() != m->intervals() && !bad++) {
        first = "interval model n=" + std::to_string(m->size());
      }
    } catch (const Error& e) {
      if (!bad++) first = std::string("interval model: ") + e.what();
    }
  }
  return {bad == 0, std::to_string(arcs) + " arc and " + std::to_string(intervals) +
                        " interval models, " + std::to_string(bad) + " failures" +
                        (bad ? "; first: " + first : "")};
}

Outcome unique_models(const std::vector<GraphInstance>& corpus) {
  std::size_t tested = 0, pairs = 0, rejected = 0, bad = 0;
  std::string first;
  for (const auto& inst : corpus) {
    if (inst.kind == Case::BipartiteDisconnected) continue;
    ++tested;
    std::vector<SharpArcModel> models;
    std::vector<Orientation> orientations;
    // Not every arc ordering of N[G] is the geometric order of a proper
    // model; reconstruction rejects those, and the rest must agree.
    for (const auto& seq : inst.arcs.all) {
      try {
        auto m = reconstruct_arc(inst.g, CircularOrder(std::vector<Vertex>(seq.begin(), seq.end())));
        if (model_to_graph(m).edges() != inst.g.edges()) {
          if (!bad++) first = inst.name + ": model graph differs for " + seq_text(seq);
          continue;
        }
        orientations.push_back(round_orientation(m));
        models.push_back(std::move(m));
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotRealizable) {
          ++rejected;
        } else if (!bad++) {
          first = inst.name + ": " + e.what() + " for " + seq_text(seq);
        }
      }
    }
    if (models.empty() && !bad++) first = inst.name + ": no ordering yields a model";
    if (inst.source && !models.empty()) {
      models.push_back(*inst.source);
      orientations.push_back(round_orientation(*inst.source));
    }
    for (std::size_t i = 1; i < models.size(); ++i) {
      ++pairs;
      const bool same_model = models_equal_up_to_symmetry(models[0], models[i], true);
      const bool same_dir = orientations[i] == orientations[0] || orientations[i] == orientations[0].reversed();
      if ((!same_model || !same_dir) && !bad++) {
        first = inst.name + (same_model ? ": orientations differ" : ": models differ");
      }
    }
  }
  return {bad == 0, std::to_string(tested) + " instances, " + std::to_string(pairs) +
                        " model pairs, " + std::to_string(rejected) + " orderings rejected, " +
                        std::to_string(bad) + " violations" +
                                     (bad ? "; first: " + first : "")};
}

Outcome half_graph_counts() {
  auto non_tight = [](std::size_t m) {
    const auto c = maskoracle::arc_classes(maskoracle::closed_neighborhoods(gen_half_graph_complement(m)));
    return c.all.size() - c.tight.size();
  };
  const auto three = non_tight(3), four = non_tight(4);
  const bool ok = three >= 1 && four > three && three == kHalfNonTight3 && four == kHalfNonTight4;
  return {ok, "non-tight classes m=3: " + std::to_string(three) + ", m=4: " + std::to_string(four) +
                  " (frozen " + std::to_string(kHalfNonTight3) + ", " + std::to_string(kHalfNonTight4) + ")"};
}

Outcome p3_vector() {
  Graph g(std::vector<std::string>{"a", "b", "c"});
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  const auto m = reconstruct_interval(g, LinearOrder({0, 1, 2}));
  const std::vector<Endpoints> expected{{1, 3}, {2, 5}, {4, 6}};
  bool oracle = true;
  for (Vertex u = 0; u < 3; ++u) {
    for (Vertex v = u + 1; v < 3; ++v) {
      const auto &x = expected[u], &y = expected[v];
      oracle = oracle && ((x.a <= y.b && y.a <= x.b) == g.adjacent(u, v));
    }
  }
  std::string got;
  for (const auto& e : m.intervals()) got += "[" + std::to_string(e.a) + "," + std::to_string(e.b) + "]";
  return {oracle && m.intervals() == expected, "got " + got};
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  std::vector<HyperInstance> hypers;
  std::vector<GraphInstance> graphs;
  int failed = 0;

  auto run = [&](int id, const char* name, double limit_s, const std::function<Outcome()>& fn) {
    const auto t0 = Clock::now();
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs > limit_s) {
      out.pass = false;
      out.detail += "; over the time limit";
    }
    failed += !out.pass;
    std::printf("criterion %d %-28s %s  %s [%.1fs]\n", id, name, out.pass ? "PASS" : "FAIL",
                out.detail.c_str(), secs);
    std::fflush(stdout);
  };

  // Corpus construction is timed as part of the criterion that first needs it.
  run(1, "quilliot-equivalence", 600, [&] {
    hypers = hyper_corpus(100000);
    return quilliot_equivalence(hypers);
  });
  run(2, "unique-arc-representation", 600, [&] { return unique_representation(hypers); });
  run(3, "at-most-one-tight-ordering", 600, [&] { return tight_at_most_one(hypers); });
  run(4, "neighbourhood-rigidity", 900, [&] {
    graphs = pca_corpus(1000);
    return nrigid(graphs);
  });
  run(5, "stripped-overlap-connectivity", 600, [&] { return ovconn(graphs); });
  run(6, "reconstruction-roundtrip", 300, reconstruction_roundtrip);
  run(7, "unique-models", 600, [&] { return unique_models(graphs); });
  run(8, "half-graph-non-tight", 600, half_graph_counts);
  run(9, "p3-vector", 60, p3_vector);
  return failed ? 1 : 0;
}
