#ifndef ARCRIGID_TOOLS_CLI_HPP
#define ARCRIGID_TOOLS_CLI_HPP

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "arcrigid/error.hpp"
#include "arcrigid/ordering.hpp"

namespace cli {

using nlohmann::json;

struct Options {
  std::optional<std::size_t> cap;
  std::uint64_t seed = 1;
  bool tight_only = false;
  bool no_strip = false;
  bool json = false;
  bool enumerate = false;
  bool dot = false;
  bool reconstruct = false;
  bool require_connected = false;
  bool model = false;

  arcrigid::EnumerationCaps caps() const;
};

enum Exit { kOk = 0, kViolation = 1, kError = 2 };

json error_json(const arcrigid::Error& e);
json labels_of(const std::vector<arcrigid::Vertex>& seq, const std::vector<std::string>& labels);
/// Writes the report as JSON, or `text` when not in JSON mode.
void print(const Options& opt, const json& report, const std::string& text);

int analyze_hypergraph(const std::string& path, const Options& opt);
int analyze_graph(const std::string& path, const Options& opt);
int generate(const std::string& family, const std::vector<std::string>& params,
             const Options& opt);
int verify(const std::string& corpus, const std::string& suite, const Options& opt);

}  // namespace cli

#endif  // ARCRIGID_TOOLS_CLI_HPP
