#include <charconv>
#include <iostream>
#include <optional>

#include "arcrigid/io.hpp"
#include "arcrigid/pca.hpp"
#include "cli.hpp"

namespace cli {

using namespace arcrigid;

namespace {

template <class T>
T number(const std::vector<std::string>& params, std::size_t i, const std::string& what) {
  if (i >= params.size()) throw Error(ErrorKind::PreconditionViolated, "missing parameter " + what);
  const auto& s = params[i];
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::PreconditionViolated, "bad value for " + what + ": " + s);
  }
  return value;
}

}  // namespace

int generate(const std::string& family, const std::vector<std::string>& params,
             const Options& opt) {
  std::optional<Graph> graph;
  std::optional<SharpArcModel> model;
  std::size_t expected = 1;
  if (family == "half" || family == "half-complement") {
    const auto m = number<std::size_t>(params, 0, "m");
    graph = family == "half" ? gen_half_graph(m) : gen_half_graph_complement(m);
  } else if (family == "gk") {
    auto gk = gen_gk(number<std::size_t>(params, 0, "k"));
    graph = std::move(gk.graph);
    model = std::move(gk.model);
  } else if (family == "fig-example") {
    expected = 0;
    graph = gen_fig_example();
  } else {
    const auto n = number<std::size_t>(params, 0, "n");
    const auto density = number<double>(params, 1, "density");
    const auto seed = params.size() > 2 ? number<std::uint64_t>(params, 2, "seed") : opt.seed;
    expected = 3;
    auto gen = gen_random_pca(n, density, seed);
    graph = std::move(gen.graph);
    model = std::move(gen.model);
  }
  if (params.size() > expected) {
    throw Error(ErrorKind::PreconditionViolated, "too many parameters for " + family);
  }
  if (opt.model && !model) {
    throw Error(ErrorKind::PreconditionViolated, family + " has no model");
  }

  if (opt.json) {
    json report{{"command", "generate"}, {"ok", true}, {"family", family},
                {"graph", emit_graph(*graph)},
                {"model", model ? json(emit_model(*model)) : json()}};
    std::cout << report.dump(2) << "\n";
  } else if (opt.dot) {
    std::cout << to_dot(*graph);
  } else {
    std::cout << (opt.model ? emit_model(*model) : emit_graph(*graph));
  }
  return kOk;
}

}  // namespace cli
