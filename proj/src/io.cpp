#include "arcrigid/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

namespace arcrigid {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Splits into lines of whitespace separated tokens; a ':' ends its token so
// "edge:" and "edge :" read the same.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (is_space(raw[i])) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && !is_space(raw[j]) && raw[j] != ':') ++j;
      if (j < raw.size() && raw[j] == ':') ++j;
      line.tokens.push_back({raw.substr(i, j - i), i + 1});
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void fail(const Line& line, std::size_t token, const std::string& message) {
  const std::size_t column =
      token < line.tokens.size() ? line.tokens[token].column
                                 : (line.tokens.empty() ? 1 : line.tokens.back().column +
                                                                  line.tokens.back().text.size());
  throw ParseError(line.number, column, message);
}

[[noreturn]] void fail_at_end(std::string_view text, const std::string& message) {
  std::size_t lines = 1;
  for (char c : text) lines += c == '\n';
  throw ParseError(lines, 1, message);
}

bool valid_label(std::string_view s) { return !s.empty() && s.back() != ':'; }

std::size_t parse_number(const Line& line, std::size_t token) {
  if (token >= line.tokens.size()) fail(line, token, "expected a number");
  auto t = line.tokens[token].text;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size()) fail(line, token, "expected a number");
  return value;
}

struct Universe {
  std::vector<std::string> labels;
  std::map<std::string, Vertex, std::less<>> index;

  Vertex lookup(const Line& line, std::size_t token) const {
    auto it = index.find(line.tokens[token].text);
    if (it == index.end()) {
      fail(line, token, "unknown vertex '" + std::string(line.tokens[token].text) + "'");
    }
    return it->second;
  }
};

Universe read_vertices(const Line& line) {
  Universe u;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) {
    std::string label(line.tokens[i].text);
    if (!valid_label(label)) fail(line, i, "invalid vertex label");
    if (!u.index.emplace(label, u.labels.size()).second) fail(line, i, "duplicate vertex");
    u.labels.push_back(std::move(label));
  }
  return u;
}

std::optional<Universe> take_vertices(const std::vector<Line>& lines, std::size_t& i) {
  if (i < lines.size() && lines[i].tokens[0].text == "vertices:") return read_vertices(lines[i++]);
  return std::nullopt;
}

const Line& first_line(const std::vector<Line>& lines, std::string_view text,
                       std::string_view what) {
  if (lines.empty()) fail_at_end(text, "empty document, expected " + std::string(what));
  return lines.front();
}

struct GraphBlock {
  Graph graph;
  std::size_t next_line;
};

GraphBlock read_graph_block(const std::vector<Line>& lines, std::string_view text,
                            bool allow_dirs) {
  const auto& head = first_line(lines, text, "'vertices:'");
  std::size_t i = 0;
  auto u = take_vertices(lines, i);
  if (!u) fail(head, 0, "expected 'vertices:'");
  Graph g(u->labels);
  for (; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto key = line.tokens[0].text;
    if (allow_dirs && key == "dir:") break;
    if (key != "edge:") fail(line, 0, "expected 'edge:'");
    if (line.tokens.size() != 3) fail(line, std::min<std::size_t>(line.tokens.size(), 3),
                                      "a graph edge names exactly two vertices");
    const Vertex a = u->lookup(line, 1);
    const Vertex b = u->lookup(line, 2);
    if (a == b) fail(line, 2, "loops are not allowed");
    g.add_edge(a, b);
  }
  return {std::move(g), i};
}

void check_label(const std::string& s) {
  if (s.empty() || s.find_first_of(" \t\r\n#:") != std::string::npos) {
    throw Error(ErrorKind::Io, "label '" + s + "' cannot be written");
  }
}

std::string join(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) {
    check_label(l);
    out += ' ';
    out += l;
  }
  return out;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  const auto lines = tokenize(text);
  const auto& head = first_line(lines, text, "'vertices:'");
  std::size_t i = 0;
  auto u = take_vertices(lines, i);
  if (!u) fail(head, 0, "expected 'vertices:'");
  std::vector<VertexSet> edges;
  for (; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens[0].text != "edge:") fail(line, 0, "expected 'edge:'");
    VertexSet e(u->labels.size());
    for (std::size_t t = 1; t < line.tokens.size(); ++t) e.set(u->lookup(line, t));
    edges.push_back(std::move(e));
  }
  return Hypergraph(u->labels, std::move(edges));
}

Graph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  return read_graph_block(lines, text, false).graph;
}

SharpModel parse_model(std::string_view text) {
  const auto lines = tokenize(text);
  const auto& head = first_line(lines, text, "'n:'");
  if (head.tokens[0].text != "n:" || head.tokens.size() != 2) fail(head, 0, "expected 'n: <count>'");
  const std::size_t n = parse_number(head, 1);
  if (n == 0) fail(head, 1, "a model needs at least one arc");
  if (lines.size() != n + 1) {
    const auto& where = lines.size() > n + 1 ? lines[n + 1] : lines.back();
    fail(where, 0, "expected exactly " + std::to_string(n) + " arc or interval lines");
  }
  std::optional<bool> circular;
  std::vector<std::string> labels;
  std::map<std::string, bool, std::less<>> seen;
  std::vector<Endpoints> ends;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto key = line.tokens[0].text;
    if (key != "arc" && key != "interval") fail(line, 0, "expected 'arc' or 'interval'");
    const bool is_arc = key == "arc";
    if (circular && *circular != is_arc) fail(line, 0, "arcs and intervals cannot be mixed");
    circular = is_arc;
    if (line.tokens.size() != 4) fail(line, std::min<std::size_t>(line.tokens.size(), 4),
                                      "expected '<kind> <vertex> <a> <b>'");
    std::string label(line.tokens[1].text);
    if (!valid_label(label)) fail(line, 1, "invalid vertex label");
    if (!seen.emplace(label, true).second) fail(line, 1, "duplicate vertex");
    labels.push_back(std::move(label));
    ends.push_back({parse_number(line, 2), parse_number(line, 3)});
  }
  if (*circular) return SharpArcModel(std::move(ends), std::move(labels));
  return SharpIntervalModel(std::move(ends), std::move(labels));
}

OrderDocument parse_order(std::string_view text) {
  const auto lines = tokenize(text);
  const auto& head = first_line(lines, text, "'circular:' or 'linear:'");
  const auto key = head.tokens[0].text;
  if (key != "circular:" && key != "linear:") fail(head, 0, "expected 'circular:' or 'linear:'");
  if (lines.size() > 1) fail(lines[1], 0, "an order document has a single line");
  OrderDocument doc;
  doc.circular = key == "circular:";
  std::map<std::string, bool, std::less<>> seen;
  for (std::size_t i = 1; i < head.tokens.size(); ++i) {
    std::string label(head.tokens[i].text);
    if (!valid_label(label)) fail(head, i, "invalid vertex label");
    if (!seen.emplace(label, true).second) fail(head, i, "duplicate vertex");
    doc.sequence.push_back(std::move(label));
  }
  return doc;
}

std::vector<Vertex> resolve_order(const OrderDocument& doc, const std::vector<std::string>& labels) {
  if (doc.sequence.size() != labels.size()) {
    throw Error(ErrorKind::UniverseMismatch, "order length differs from the vertex count");
  }
  std::map<std::string_view, Vertex> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  std::vector<Vertex> out;
  for (const auto& s : doc.sequence) {
    auto it = index.find(s);
    if (it == index.end()) throw Error(ErrorKind::UniverseMismatch, "unknown vertex '" + s + "'");
    out.push_back(it->second);
  }
  return out;
}

Orientation parse_orientation(std::string_view text) {
  const auto lines = tokenize(text);
  auto block = read_graph_block(lines, text, true);
  Orientation d(block.graph);
  const auto& labels = block.graph.labels();
  std::map<std::string, Vertex, std::less<>> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  auto lookup = [&](const Line& line, std::size_t t) {
    auto it = index.find(line.tokens[t].text);
    if (it == index.end()) fail(line, t, "unknown vertex");
    return it->second;
  };
  for (std::size_t i = block.next_line; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens[0].text != "dir:") fail(line, 0, "expected 'dir:'");
    if (line.tokens.size() != 3) fail(line, 0, "expected 'dir: <from> <to>'");
    const Vertex a = lookup(line, 1);
    const Vertex b = lookup(line, 2);
    if (!block.graph.adjacent(a, b)) fail(line, 1, "not an edge of the graph");
    if (d.has_arc(a, b) || d.has_arc(b, a)) fail(line, 1, "edge directed twice");
    d.direct(a, b);
  }
  if (!d.complete()) fail_at_end(text, "some edge has no 'dir:' line");
  return d;
}

std::string emit_hypergraph(const Hypergraph& h) {
  std::string out = "vertices:" + join(h.labels()) + "\n";
  for (const auto& e : h.edges()) {
    std::vector<std::string> members;
    e.for_each([&](Vertex v) { members.push_back(h.label(v)); });
    out += "edge:" + join(members) + "\n";
  }
  return out;
}

std::string emit_graph(const Graph& g) {
  std::string out = "vertices:" + join(g.labels()) + "\n";
  for (auto [u, v] : g.edges()) out += "edge: " + g.label(u) + " " + g.label(v) + "\n";
  return out;
}

std::string emit_model(const SharpArcModel& m) {
  std::string out = "n: " + std::to_string(m.size()) + "\n";
  for (Vertex v = 0; v < m.size(); ++v) {
    check_label(m.labels()[v]);
    out += "arc " + m.labels()[v] + " " + std::to_string(m.arc(v).a) + " " +
           std::to_string(m.arc(v).b) + "\n";
  }
  return out;
}

std::string emit_model(const SharpIntervalModel& m) {
  std::string out = "n: " + std::to_string(m.size()) + "\n";
  for (Vertex v = 0; v < m.size(); ++v) {
    check_label(m.labels()[v]);
    out += "interval " + m.labels()[v] + " " + std::to_string(m.interval(v).a) + " " +
           std::to_string(m.interval(v).b) + "\n";
  }
  return out;
}

std::string emit_order(const CircularOrder& o, const std::vector<std::string>& labels) {
  std::vector<std::string> seq;
  for (auto v : o.sequence()) seq.push_back(labels.at(v));
  return "circular:" + join(seq) + "\n";
}

std::string emit_order(const LinearOrder& o, const std::vector<std::string>& labels) {
  std::vector<std::string> seq;
  for (auto v : o.sequence()) seq.push_back(labels.at(v));
  return "linear:" + join(seq) + "\n";
}

std::string emit_orientation(const Orientation& d) {
  std::string out = emit_graph(d.graph());
  const auto& g = d.graph();
  for (auto [u, v] : g.edges()) {
    if (d.has_arc(u, v)) out += "dir: " + g.label(u) + " " + g.label(v) + "\n";
    else if (d.has_arc(v, u)) out += "dir: " + g.label(v) + " " + g.label(u) + "\n";
  }
  return out;
}

std::string to_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (const auto& l : g.labels()) out += "  " + quoted(l) + ";\n";
  for (auto [u, v] : g.edges()) out += "  " + quoted(g.label(u)) + " -- " + quoted(g.label(v)) + ";\n";
  return out + "}\n";
}

std::string to_dot(const Orientation& d) {
  const auto& g = d.graph();
  std::string out = "digraph D {\n";
  for (const auto& l : g.labels()) out += "  " + quoted(l) + ";\n";
  for (auto [u, v] : g.edges()) {
    if (d.has_arc(u, v)) {
      out += "  " + quoted(g.label(u)) + " -> " + quoted(g.label(v)) + ";\n";
    } else if (d.has_arc(v, u)) {
      out += "  " + quoted(g.label(v)) + " -> " + quoted(g.label(u)) + ";\n";
    } else {
      out += "  " + quoted(g.label(u)) + " -> " + quoted(g.label(v)) + " [dir=none];\n";
    }
  }
  return out + "}\n";
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace arcrigid
