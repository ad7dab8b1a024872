#include <CLI11.hpp>
#include <iostream>

#include "cli.hpp"

namespace cli {

arcrigid::EnumerationCaps Options::caps() const {
  if (cap) return arcrigid::EnumerationCaps::with_circular(*cap);
  return arcrigid::EnumerationCaps::from_environment();
}

json error_json(const arcrigid::Error& e) {
  json out{{"kind", std::string(arcrigid::to_string(e.kind()))}, {"message", e.what()}};
  if (auto* pe = dynamic_cast<const arcrigid::ParseError*>(&e)) {
    out["line"] = pe->line();
    out["column"] = pe->column();
  }
  return out;
}

json labels_of(const std::vector<arcrigid::Vertex>& seq, const std::vector<std::string>& labels) {
  json out = json::array();
  for (auto v : seq) out.push_back(labels.at(v));
  return out;
}

void print(const Options& opt, const json& report, const std::string& text) {
  if (opt.json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

}  // namespace cli

int main(int argc, char** argv) {
  CLI::App app{"Rigidity of circular-arc and interval orderings of hypergraphs and PCA graphs"};
  app.require_subcommand(1);
  cli::Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--cap", opt.cap, "enumeration cap on the number of vertices");
    sub->add_flag("--json", opt.json, "emit a JSON report");
  };

  std::string input;
  auto* hyper = app.add_subcommand("analyze-hypergraph", "rigidity report for a hypergraph");
  hyper->add_option("file", input, "hypergraph document, '-' for stdin")->required();
  hyper->add_flag("--tight-only", opt.tight_only, "only tight orderings");
  hyper->add_flag("--no-strip", opt.no_strip, "skip removal of trivial hyperedges");
  hyper->add_flag("--enumerate", opt.enumerate, "report oracle class counts");
  common(hyper);

  auto* graph = app.add_subcommand("analyze-graph", "PCA structure report for a graph");
  graph->add_option("file", input, "graph document, '-' for stdin")->required();
  graph->add_flag("--reconstruct", opt.reconstruct, "emit a sharp proper model");
  graph->add_flag("--require-connected", opt.require_connected, "reject disconnected graphs");
  graph->add_flag("--dot", opt.dot, "print DOT instead of a report");
  common(graph);

  std::string family;
  std::vector<std::string> params;
  auto* gen = app.add_subcommand("generate", "emit a graph from one of the example families");
  gen->add_option("family", family, "half | half-complement | gk | fig-example | random-pca")
      ->required()
      ->check(CLI::IsMember({"half", "half-complement", "gk", "fig-example", "random-pca"}));
  gen->add_option("params", params, "family parameters");
  gen->add_option("--seed", opt.seed, "seed for random-pca when not given positionally");
  gen->add_flag("--model", opt.model, "print the model instead of the graph");
  gen->add_flag("--dot", opt.dot, "print DOT");
  common(gen);

  std::string corpus, suite = "theorems";
  auto* ver = app.add_subcommand("verify", "run property suites over a corpus directory");
  ver->add_option("corpus", corpus, "corpus directory, generated when missing")->required();
  ver->add_option("--suite", suite, "theorems | roundtrip | oracle")
      ->check(CLI::IsMember({"theorems", "roundtrip", "oracle"}));
  ver->add_option("--seed", opt.seed, "seed for corpus generation");
  common(ver);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*hyper) return cli::analyze_hypergraph(input, opt);
    if (*graph) return cli::analyze_graph(input, opt);
    if (*gen) return cli::generate(family, params, opt);
    return cli::verify(corpus, suite, opt);
  } catch (const arcrigid::Error& e) {
    if (opt.json) {
      const auto name = app.get_subcommands().front()->get_name();
      std::cout << cli::json{{"command", name}, {"ok", false}, {"error", cli::error_json(e)}}.dump(2)
                << "\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    return cli::kError;
  }
}
