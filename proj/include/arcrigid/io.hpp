#ifndef ARCRIGID_IO_HPP
#define ARCRIGID_IO_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "arcrigid/graph.hpp"
#include "arcrigid/hypergraph.hpp"
#include "arcrigid/model.hpp"
#include "arcrigid/ordering.hpp"

namespace arcrigid {

/*
 * Line-oriented text formats; `#` starts a comment, blank lines are skipped.
 *
 *   hypergraph   vertices: a b c d      graph   vertices: a b c
 *                edge: a b                      edge: a b
 *                edge: b c d
 *
 *   model        n: 3                   order   circular: a b c d
 *                arc a 1 3                      (or linear: a b c)
 *                arc b 2 5
 *                arc c 4 6              orientation   graph block, then
 *                (or interval lines)                  dir: a b
 *
 * Labels are whitespace-free tokens without ':' or '#'. Parse failures throw
 * ParseError with the 1-based line and column of the offending token.
 */

Hypergraph parse_hypergraph(std::string_view text);
/// Edge lines must name exactly two distinct vertices.
Graph parse_graph(std::string_view text);

using SharpModel = std::variant<SharpArcModel, SharpIntervalModel>;
/// Throws MalformedModel (not ParseError) for well-formed lines describing
/// a model that is not sharp.
SharpModel parse_model(std::string_view text);

struct OrderDocument {
  bool circular = true;
  std::vector<std::string> sequence;
};

OrderDocument parse_order(std::string_view text);
/// Map labels to vertices of a universe; throws UniverseMismatch when the
/// sequence is not a permutation of `labels`.
std::vector<Vertex> resolve_order(const OrderDocument& doc, const std::vector<std::string>& labels);

/// Every edge needs exactly one `dir:` line.
Orientation parse_orientation(std::string_view text);

std::string emit_hypergraph(const Hypergraph& h);
std::string emit_graph(const Graph& g);
std::string emit_model(const SharpArcModel& m);
std::string emit_model(const SharpIntervalModel& m);
std::string emit_order(const CircularOrder& o, const std::vector<std::string>& labels);
std::string emit_order(const LinearOrder& o, const std::vector<std::string>& labels);
std::string emit_orientation(const Orientation& d);

std::string to_dot(const Graph& g);
std::string to_dot(const Orientation& d);

/// Whole file, or standard input for "-". Throws Io.
std::string read_text(const std::string& path);

}  // namespace arcrigid

#endif  // ARCRIGID_IO_HPP
