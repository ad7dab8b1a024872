#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "arcrigid/io.hpp"
#include "arcrigid/pca.hpp"
#include "arcrigid/rigidity.hpp"
#include "cli.hpp"

namespace cli {

using namespace arcrigid;
namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + p.string());
  out << text;
}

std::string numbered(std::size_t i, const std::string& tag, const std::string& ext) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04zu", i);
  return std::string(buf) + "-" + tag + ext;
}

bool has_instances(const fs::path& dir) {
  if (!fs::is_directory(dir)) return false;
  for (const auto& e : fs::directory_iterator(dir)) {
    const auto ext = e.path().extension();
    if (ext == ".graph" || ext == ".model" || ext == ".hyper") return true;
  }
  return false;
}

Hypergraph random_ca(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<std::size_t> count(1, 2 * n), pos(0, n - 1), len(1, n);
  std::vector<VertexSet> edges;
  for (std::size_t k = count(rng); k > 0; --k) {
    VertexSet e(n);
    const auto s = pos(rng);
    for (std::size_t j = len(rng); j > 0; --j) e.set(perm[(s + j) % n]);
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges));
}

void generate_corpus(const fs::path& dir, std::uint64_t seed) {
  fs::create_directories(dir);
  std::size_t id = 0;
  for (std::size_t k = 2; k <= 5; ++k) {
    const auto gk = gen_gk(k);
    write_file(dir / numbered(id, "gk" + std::to_string(k), ".graph"), emit_graph(gk.graph));
    write_file(dir / numbered(id++, "gk" + std::to_string(k), ".model"), emit_model(gk.model));
  }
  write_file(dir / numbered(id++, "fig", ".graph"), emit_graph(gen_fig_example()));
  for (std::size_t m = 3; m <= 4; ++m) {
    write_file(dir / numbered(id++, "half-complement" + std::to_string(m), ".graph"),
               emit_graph(gen_half_graph_complement(m)));
  }
  std::mt19937_64 rng(seed);
  for (std::size_t made = 0; made < 60;) {
    const std::size_t n = 4 + rng() % 6;
    const double density = 0.3 + 0.1 * static_cast<double>(rng() % 8);
    auto gen = gen_random_pca(n, density, rng(), {.twin_free = true});
    if (gen.graph.size() < 4 || !is_connected(gen.graph)) continue;
    write_file(dir / numbered(id++, "pca", ".graph"), emit_graph(gen.graph));
    ++made;
  }
  for (std::size_t i = 0; i < 60; ++i) {
    auto gen = gen_random_pca(2 + rng() % 31, 0.1 + 0.1 * static_cast<double>(rng() % 9), rng());
    write_file(dir / numbered(id++, "arc", ".model"), emit_model(gen.model));
  }
  for (std::size_t i = 0; i < 30; ++i) {
    auto gen = gen_random_proper_interval(2 + rng() % 31, 0.1 + 0.1 * static_cast<double>(rng() % 9), rng());
    write_file(dir / numbered(id++, "interval", ".model"), emit_model(gen.model));
  }
  for (std::size_t i = 0; i < 120; ++i) {
    write_file(dir / numbered(id++, "ca", ".hyper"), emit_hypergraph(random_ca(rng, 4 + rng() % 4)));
  }
}

struct Tally {
  std::size_t instances = 0, passed = 0, failed = 0, skipped = 0;
  json violations = json::array();
  json errors = json::array();
};

// Checks for one instance; each returns false (with a witness) on a violation
// and throws Skip when the instance is outside the suite's scope.
struct Skip {
  std::string reason;
};

class Checker {
 public:
  Checker(std::string instance, Tally& tally) : instance_(std::move(instance)), tally_(tally) {}

  void expect(bool ok, const std::string& property, const std::string& witness) {
    if (!ok) violations_.push_back({{"instance", instance_}, {"property", property}, {"witness", witness}});
  }
  bool ok() const { return violations_.empty(); }
  void commit() {
    if (ok()) {
      ++tally_.passed;
    } else {
      ++tally_.failed;
      for (auto& v : violations_) tally_.violations.push_back(std::move(v));
    }
  }

 private:
  std::string instance_;
  Tally& tally_;
  std::vector<json> violations_;
};

std::string order_text(const std::vector<Vertex>& seq, const std::vector<std::string>& labels) {
  std::string out;
  for (auto v : seq) out += (out.empty() ? "" : " ") + labels[v];
  return out;
}

void theorems_graph(const Graph& g, const EnumerationCaps& caps, Checker& c) {
  if (!is_twin_free(g) || !is_connected(g)) throw Skip{"not twin-free and connected"};
  if (!recognize_pca(g, caps).is_pca) throw Skip{"not PCA"};
  const auto v = nrigid_verdict(g, caps);
  if (v.kind == NrigidCase::SmallInstance) throw Skip{"small instance"};
  if (!v.oracle_all_classes) throw Skip{"above the enumeration cap"};
  if (v.claimed_all_classes) {
    c.expect(*v.claimed_all_classes == *v.oracle_all_classes, "unique arc ordering of N[G]",
             std::to_string(*v.oracle_all_classes) + " classes");
  }
  if (v.claimed_tight_classes) {
    c.expect(*v.claimed_tight_classes == *v.oracle_tight_classes, "tight class count of N[G]",
             std::to_string(*v.oracle_tight_classes) + " tight classes");
  }
  if (v.kind == NrigidCase::NonBipartiteComplement) {
    c.expect(*v.oracle_all_classes == *v.oracle_tight_classes, "every arc ordering is tight",
             "non-tight ordering exists");
    const auto sr = check_structural_lemmas(g, v.tight_orders.front(), caps);
    for (const auto& chk : sr.checks) c.expect(chk.passed, chk.name, chk.counterexample);
    c.expect(theorem_ovconn_check(g, caps), "stripped overlap-connectivity",
             order_text(v.tight_orders.front().sequence(), g.labels()));
  }
}

void theorems_hyper(const Hypergraph& h, const EnumerationCaps& caps, Checker& c) {
  if (h.size() > caps.circular) throw Skip{"above the enumeration cap"};
  if (!is_twin_free(h)) throw Skip{"has twins"};
  bool any = false;
  if (relation_components(h, EdgeRelation::StrictOverlap).connected() && solve_arc_ordering(h, caps)) {
    any = true;
    const auto k = count_arc_orderings(h, OrderingMode::All, caps.circular);
    c.expect(k == 1, "unique arc ordering", std::to_string(k) + " classes");
  }
  if (relation_components(h, EdgeRelation::Intersect).connected()) {
    any = true;
    const auto k = count_interval_orderings(h, OrderingMode::TightOnly, caps.linear);
    c.expect(k <= 1, "at most one tight interval ordering", std::to_string(k) + " classes");
  }
  if (relation_components(without_complete_edge(h), EdgeRelation::StrictIntersect).connected()) {
    any = true;
    const auto k = count_arc_orderings(h, OrderingMode::TightOnly, caps.circular);
    c.expect(k <= 1, "at most one tight arc ordering", std::to_string(k) + " classes");
  }
  if (!any) throw Skip{"no connectivity hypothesis holds"};
}

void roundtrip_model(const SharpModel& model, Checker& c) {
  if (auto* m = std::get_if<SharpArcModel>(&model)) {
    c.expect(std::get<SharpArcModel>(parse_model(emit_model(*m))) == *m, "model emit/parse", "");
    const auto g = model_to_graph(*m);
    if (!is_proper(*m)) throw Skip{"model is not proper"};
    if (universal_vertices(g).count() >= 2) throw Skip{"two universal vertices"};
    const auto rebuilt = reconstruct_arc(g, geometric_order(*m));
    c.expect(models_equal_up_to_symmetry(*m, rebuilt, false), "arc reconstruction", emit_model(rebuilt));
  } else {
    const auto& mi = std::get<SharpIntervalModel>(model);
    c.expect(std::get<SharpIntervalModel>(parse_model(emit_model(mi))) == mi, "model emit/parse", "");
    if (!is_proper(mi)) throw Skip{"model is not proper"};
    const auto rebuilt = reconstruct_interval(model_to_graph(mi), geometric_order(mi));
    c.expect(rebuilt == mi, "interval reconstruction", emit_model(rebuilt));
  }
}

void oracle_graph(const Graph& g, const EnumerationCaps& caps, Checker& c) {
  if (g.size() > caps.circular) throw Skip{"above the enumeration cap"};
  const auto h = closed_neighborhood_hypergraph(g).hypergraph;
  const bool tight = count_arc_orderings(h, OrderingMode::TightOnly, caps.circular) > 0;
  c.expect(recognize_pca(g, caps).is_pca == tight, "PCA recognition", "");
  if (g.size() <= caps.linear) {
    const bool lin = count_interval_orderings(h, OrderingMode::TightOnly, caps.linear) > 0;
    c.expect(recognize_proper_interval(g, caps).is_pi == lin, "proper interval recognition", "");
  }
}

void oracle_hyper(const Hypergraph& h, const EnumerationCaps& caps, Checker& c) {
  if (h.size() > caps.circular) throw Skip{"above the enumeration cap"};
  RigidityOptions opt;
  opt.caps = caps;
  for (auto fn : {&arc_rigidity, &tight_arc_rigidity, &interval_rigidity, &tight_interval_rigidity}) {
    const auto v = (*fn)(h, opt);
    const auto cv = cross_validate(h, v, caps);
    for (const auto& d : cv.discrepancies) {
      c.expect(false, std::string(to_string(v.kind)) + " " + d.check, d.detail);
    }
  }
}

}  // namespace

int verify(const std::string& corpus, const std::string& suite, const Options& opt) {
  const fs::path dir(corpus);
  const bool generated = !has_instances(dir);
  if (generated) generate_corpus(dir, opt.seed);
  const auto caps = opt.caps();

  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    const auto ext = e.path().extension();
    if (ext == ".graph" || ext == ".model" || ext == ".hyper") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());

  Tally tally;
  json skipped = json::array();
  for (const auto& path : files) {
    const auto name = path.filename().string();
    const auto ext = path.extension().string();
    ++tally.instances;
    Checker c(name, tally);
    try {
      const auto text = read_text(path.string());
      if (suite == "roundtrip") {
        if (ext == ".model") {
          roundtrip_model(parse_model(text), c);
        } else if (ext == ".graph") {
          const auto g = parse_graph(text);
          c.expect(parse_graph(emit_graph(g)) == g, "graph emit/parse", "");
        } else {
          const auto h = parse_hypergraph(text);
          c.expect(parse_hypergraph(emit_hypergraph(h)) == h, "hypergraph emit/parse", "");
        }
      } else if (suite == "theorems") {
        if (ext == ".graph") theorems_graph(parse_graph(text), caps, c);
        else if (ext == ".hyper") theorems_hyper(parse_hypergraph(text), caps, c);
        else throw Skip{"models are covered by the roundtrip suite"};
      } else {
        if (ext == ".graph") {
          oracle_graph(parse_graph(text), caps, c);
        } else if (ext == ".hyper") {
          oracle_hyper(parse_hypergraph(text), caps, c);
        } else {
          const auto model = parse_model(text);
          const auto g = std::visit([](const auto& m) { return model_to_graph(m); }, model);
          if (std::holds_alternative<SharpArcModel>(model)) {
            c.expect(recognize_pca(g, caps).is_pca, "model graph recognized as PCA", "");
          } else {
            c.expect(recognize_proper_interval(g, caps).is_pi,
                     "model graph recognized as proper interval", "");
          }
        }
      }
      c.commit();
    } catch (const Skip& s) {
      ++tally.skipped;
      skipped.push_back({{"instance", name}, {"reason", s.reason}});
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::TooLarge) {
        ++tally.skipped;
        skipped.push_back({{"instance", name}, {"reason", e.what()}});
        continue;
      }
      auto row = error_json(e);
      row["instance"] = name;
      tally.errors.push_back(std::move(row));
    }
  }

  const bool ok = tally.violations.empty() && tally.errors.empty();
  json report{{"command", "verify"}, {"ok", ok}, {"suite", suite}, {"corpus", dir.string()},
              {"generated", generated}, {"instances", tally.instances},
              {"passed", tally.passed}, {"failed", tally.failed},
              {"skipped", tally.skipped}, {"violations", tally.violations},
              {"errors", tally.errors}, {"skipped_instances", skipped}};
  std::ostringstream text;
  for (const auto& v : tally.violations) {
    text << "violation " << v["instance"].get<std::string>() << ": "
         << v["property"].get<std::string>() << " " << v["witness"].get<std::string>() << "\n";
  }
  for (const auto& e : tally.errors) {
    text << "error " << e["instance"].get<std::string>() << ": " << e["kind"].get<std::string>()
         << " " << e["message"].get<std::string>() << "\n";
  }
  text << suite << ": " << tally.instances << " instances, " << tally.passed << " passed, "
       << tally.failed << " failed, " << tally.skipped << " skipped, " << tally.errors.size()
       << " errors\n";
  print(opt, report, text.str());
  return ok ? kOk : kViolation;
}

}  // namespace cli
