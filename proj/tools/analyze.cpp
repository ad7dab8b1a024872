#include <iostream>
#include <sstream>

#include "arcrigid/io.hpp"
#include "arcrigid/pca.hpp"
#include "arcrigid/rigidity.hpp"
#include "cli.hpp"

namespace cli {

using namespace arcrigid;

namespace {

json set_json(const VertexSet& s, const std::vector<std::string>& labels) {
  return labels_of(s.indices(), labels);
}

std::string set_text(const json& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ' ';
    out += members[i].get<std::string>();
  }
  return out + "}";
}

std::string seq_text(const json& members) {
  std::string out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ' ';
    out += members[i].get<std::string>();
  }
  return out;
}

json witness_json(const Witness& w, const std::vector<std::string>& labels) {
  json out = json::object();
  if (w.twins) out["twins"] = labels_of({w.twins->first, w.twins->second}, labels);
  if (w.separated) {
    out["separated"] = {set_json(w.separated->first, labels), set_json(w.separated->second, labels)};
  }
  if (w.isolated) out["isolated"] = set_json(*w.isolated, labels);
  if (w.oracle_classes) out["oracle_classes"] = *w.oracle_classes;
  if (!w.circular_orders.empty()) {
    out["circular_orders"] = json::array();
    for (const auto& o : w.circular_orders) out["circular_orders"].push_back(labels_of(o.sequence(), labels));
  }
  if (!w.linear_orders.empty()) {
    out["linear_orders"] = json::array();
    for (const auto& o : w.linear_orders) out["linear_orders"].push_back(labels_of(o.sequence(), labels));
  }
  if (w.quilliot_set) out["quilliot_set"] = set_json(*w.quilliot_set, labels);
  return out;
}

json verdict_json(const RigidityVerdict& v, const std::vector<std::string>& labels) {
  json out{{"kind", std::string(to_string(v.kind))},
           {"status", std::string(to_string(v.status))},
           {"basis", std::string(to_string(v.basis))},
           {"unique", v.unique()},
           {"witness", witness_json(v.witness, labels)}};
  if (v.circular) out["order"] = labels_of(v.circular->sequence(), labels);
  else if (v.linear) out["order"] = labels_of(v.linear->sequence(), labels);
  else out["order"] = nullptr;
  return out;
}

}  // namespace

int analyze_hypergraph(const std::string& path, const Options& opt) {
  const auto h = parse_hypergraph(read_text(path));
  if (h.has_empty_edge()) throw Error(ErrorKind::EmptyHyperedge, "the empty hyperedge is not allowed");
  const auto& labels = h.labels();
  const auto caps = opt.caps();
  std::ostringstream text;

  json report{{"command", "analyze-hypergraph"}, {"ok", true}, {"n", h.size()},
              {"labels", labels}, {"edge_count", h.edge_count()},
              {"duplicates_removed", h.duplicates_removed()}};
  text << "vertices: " << h.size() << ", hyperedges: " << h.edge_count() << "\n";

  report["twin_classes"] = json::array();
  text << "twin classes:";
  for (const auto& c : twin_classes(h)) {
    report["twin_classes"].push_back(labels_of(c, labels));
    text << ' ' << set_text(report["twin_classes"].back());
  }
  text << "\n";

  report["connectivity"] = json::array();
  for (auto rel : {EdgeRelation::Overlap, EdgeRelation::StrictOverlap, EdgeRelation::Intersect,
                   EdgeRelation::StrictIntersect}) {
    const auto rc = relation_components(h, rel);
    json row{{"relation", std::string(to_string(rel))},
             {"components", rc.components.size()},
             {"isolated", set_json(rc.isolated_vertices, labels)},
             {"connected", rc.connected()}};
    text << "connectivity " << to_string(rel) << ": " << rc.components.size() << " component(s), "
         << rc.isolated_vertices.count() << " isolated" << (rc.connected() ? ", connected" : "")
         << "\n";
    report["connectivity"].push_back(std::move(row));
  }

  RigidityOptions ropt;
  ropt.caps = caps;
  ropt.strip = !opt.no_strip;
  using Fn = RigidityVerdict (*)(const Hypergraph&, const RigidityOptions&);
  std::vector<Fn> fns;
  if (!opt.tight_only) fns.push_back(&arc_rigidity);
  fns.push_back(&tight_arc_rigidity);
  if (!opt.tight_only) fns.push_back(&interval_rigidity);
  fns.push_back(&tight_interval_rigidity);
  report["verdicts"] = json::array();
  for (auto fn : fns) {
    try {
      const auto v = fn(h, ropt);
      auto row = verdict_json(v, labels);
      text << to_string(v.kind) << ": " << to_string(v.status) << " (" << to_string(v.basis) << ")";
      if (!row["order"].is_null()) text << " order " << seq_text(row["order"]);
      text << "\n";
      report["verdicts"].push_back(std::move(row));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TooLarge) throw;
      report["verdicts"].push_back({{"error", error_json(e)}});
      text << "verdict skipped: " << e.what() << "\n";
    }
  }

  if (opt.enumerate) {
    try {
      json counts;
      if (!opt.tight_only) {
        counts["arc"] = count_arc_orderings(h, OrderingMode::All, caps.circular);
        counts["interval"] = count_interval_orderings(h, OrderingMode::All, caps.linear);
      }
      counts["tight_arc"] = count_arc_orderings(h, OrderingMode::TightOnly, caps.circular);
      counts["tight_interval"] = count_interval_orderings(h, OrderingMode::TightOnly, caps.linear);
      text << "oracle classes:";
      for (auto& [k, v] : counts.items()) text << ' ' << k << '=' << v.get<std::size_t>();
      text << "\n";
      report["oracle"] = std::move(counts);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TooLarge) throw;
      report["oracle"] = {{"skipped", e.what()}};
      text << "oracle skipped: " << e.what() << "\n";
    }
  } else {
    report["oracle"] = nullptr;
  }
  print(opt, report, text.str());
  return kOk;
}

int analyze_graph(const std::string& path, const Options& opt) {
  const auto g = parse_graph(read_text(path));
  const auto& labels = g.labels();
  const auto caps = opt.caps();
  if (g.size() == 0) throw Error(ErrorKind::PreconditionViolated, "empty graph");
  const bool connected = is_connected(g);
  if (opt.require_connected && !connected) {
    throw Error(ErrorKind::PreconditionViolated, "graph is not connected");
  }
  const auto co = complement_graph(g);
  const bool co_bipartite = is_bipartite(co);
  std::ostringstream text;

  json report{{"command", "analyze-graph"}, {"ok", true}, {"n", g.size()},
              {"labels", labels}, {"edge_count", g.edge_count()},
              {"connected", connected}, {"twin_free", is_twin_free(g)},
              {"complement_bipartite", co_bipartite},
              {"complement_connected", is_connected(co)},
              {"universal", set_json(universal_vertices(g), labels)},
              {"strictly_connected", strict_connectedness_of_neighborhoods(g)}};
  text << "vertices: " << g.size() << ", edges: " << g.edge_count()
       << (connected ? ", connected" : ", disconnected")
       << (report["twin_free"].get<bool>() ? ", twin-free" : ", has twins")
       << (co_bipartite ? ", co-bipartite" : "") << "\n";

  const auto pca = recognize_pca(g, caps);
  report["pca"] = {{"is_pca", pca.is_pca},
                   {"order", pca.tight_order ? labels_of(pca.tight_order->sequence(), labels) : json()}};
  text << "PCA: " << (pca.is_pca ? "yes, tight order " + seq_text(report["pca"]["order"]) : "no") << "\n";
  const auto pi = recognize_proper_interval(g, caps);
  report["proper_interval"] = {
      {"is_pi", pi.is_pi},
      {"order", pi.tight_order ? labels_of(pi.tight_order->sequence(), labels) : json()}};
  text << "proper interval: "
       << (pi.is_pi ? "yes, tight order " + seq_text(report["proper_interval"]["order"]) : "no")
       << "\n";

  try {
    const auto v = nrigid_verdict(g, caps);
    json row{{"case", std::string(to_string(v.kind))}, {"tight_orders", json::array()}};
    for (const auto& o : v.tight_orders) row["tight_orders"].push_back(labels_of(o.sequence(), labels));
    auto opt_count = [](const std::optional<std::size_t>& c) { return c ? json(*c) : json(); };
    row["claimed_tight_classes"] = opt_count(v.claimed_tight_classes);
    row["claimed_all_classes"] = opt_count(v.claimed_all_classes);
    row["oracle_tight_classes"] = opt_count(v.oracle_tight_classes);
    row["oracle_all_classes"] = opt_count(v.oracle_all_classes);
    text << "neighbourhood rigidity: " << to_string(v.kind);
    if (v.oracle_all_classes) {
      text << ", oracle classes all=" << *v.oracle_all_classes
           << " tight=" << *v.oracle_tight_classes;
    }
    text << "\n";
    report["nrigid"] = std::move(row);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::PreconditionViolated && e.kind() != ErrorKind::TooLarge) throw;
    report["nrigid"] = {{"skipped", e.what()}};
    text << "neighbourhood rigidity skipped: " << e.what() << "\n";
  }

  if (pca.is_pca && !co_bipartite) {
    const auto sr = check_structural_lemmas(g, *pca.tight_order, caps);
    json checks = json::array();
    for (const auto& c : sr.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"counterexample", c.counterexample}});
      text << "check " << c.name << ": " << (c.passed ? "pass" : "FAIL " + c.counterexample) << "\n";
    }
    report["structural"] = {{"checks", checks}, {"all_passed", sr.all_passed()}};
    if (is_twin_free(g) && connected) {
      report["ovconn"] = theorem_ovconn_check(g, caps);
      text << "stripped overlap-connectivity: " << (report["ovconn"].get<bool>() ? "yes" : "no") << "\n";
    } else {
      report["ovconn"] = nullptr;
    }
  } else {
    report["structural"] = {{"skipped", pca.is_pca ? "complement is bipartite" : "graph is not PCA"}};
    report["ovconn"] = nullptr;
  }

  std::optional<Orientation> orientation;
  if (opt.reconstruct) {
    try {
      std::string model;
      if (pi.is_pi) {
        const auto m = reconstruct_interval(g, *pi.tight_order);
        model = emit_model(m);
        orientation = straight_orientation(m);
      } else if (pca.is_pca) {
        const auto m = reconstruct_arc(g, *pca.tight_order);
        model = emit_model(m);
        orientation = round_orientation(m);
      } else {
        throw Error(ErrorKind::NotRealizable, "graph is neither proper interval nor PCA");
      }
      report["reconstruction"] = {{"model", model}};
      text << model;
    } catch (const Error& e) {
      report["reconstruction"] = {{"error", error_json(e)}};
      text << "reconstruction failed: " << e.what() << "\n";
    }
  }

  if (opt.dot) {
    std::cout << (orientation ? to_dot(*orientation) : to_dot(g));
    return kOk;
  }
  print(opt, report, text.str());
  return kOk;
}

}  // namespace cli
