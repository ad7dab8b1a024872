#ifndef ARCRIGID_MODEL_HPP
#define ARCRIGID_MODEL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "arcrigid/graph.hpp"
#include "arcrigid/ordering.hpp"

namespace arcrigid {

/// 1-based endpoints [a, b]. On a circle the arc runs clockwise from a to b
/// and wraps past the last point when a > b.
struct Endpoints {
  std::size_t a = 0;
  std::size_t b = 0;
  friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

/// Arcs on the circle with points 1..m, one per vertex. Not necessarily sharp.
class ArcModel {
 public:
  /// Throws MalformedModel when an endpoint lies outside 1..points.
  ArcModel(std::size_t points, std::vector<Endpoints> arcs, std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return arcs_.size(); }
  std::size_t points() const noexcept { return points_; }
  const std::vector<Endpoints>& arcs() const noexcept { return arcs_; }
  const Endpoints& arc(Vertex v) const { return arcs_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Whether the arc of `v` covers point `p`.
  bool covers(Vertex v, std::size_t p) const;
  std::size_t length(Vertex v) const;

  friend bool operator==(const ArcModel&, const ArcModel&) = default;

 protected:
  std::size_t points_;
  std::vector<Endpoints> arcs_;
  std::vector<std::string> labels_;
};

/// Intervals on the segment 1..m with a <= b.
class IntervalModel {
 public:
  IntervalModel(std::size_t points, std::vector<Endpoints> intervals,
                std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return intervals_.size(); }
  std::size_t points() const noexcept { return points_; }
  const std::vector<Endpoints>& intervals() const noexcept { return intervals_; }
  const Endpoints& interval(Vertex v) const { return intervals_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool covers(Vertex v, std::size_t p) const;

  friend bool operator==(const IntervalModel&, const IntervalModel&) = default;

 protected:
  std::size_t points_;
  std::vector<Endpoints> intervals_;
  std::vector<std::string> labels_;
};

/// Arc model on exactly 2n points whose 2n endpoints are pairwise distinct.
class SharpArcModel : public ArcModel {
 public:
  /// Throws MalformedModel unless sharp.
  explicit SharpArcModel(std::vector<Endpoints> arcs, std::vector<std::string> labels = {});
};

class SharpIntervalModel : public IntervalModel {
 public:
  explicit SharpIntervalModel(std::vector<Endpoints> intervals,
                              std::vector<std::string> labels = {});
};

Graph model_to_graph(const ArcModel& model);
Graph model_to_graph(const IntervalModel& model);
/// No arc (interval) contains another; equal arcs count as containment.
bool is_proper(const ArcModel& model);
bool is_proper(const IntervalModel& model);

/// Vertices by clockwise start point, beginning at point 1.
CircularOrder geometric_order(const SharpArcModel& model);
LinearOrder geometric_order(const SharpIntervalModel& model);

/// Clone shared endpoints (starts before ends at the same point; among starts
/// shorter first, among ends longer first, ties by vertex) and drop inner
/// points. Preserves the intersection graph; turns a tight model proper.
SharpArcModel sharpen(const ArcModel& model);
SharpIntervalModel sharpen(const IntervalModel& model);

/// Shift every point by `shift` positions clockwise.
SharpArcModel rotated(const SharpArcModel& model, std::size_t shift);
/// Point x maps to 2n+1-x.
SharpArcModel reflected(const SharpArcModel& model);
SharpIntervalModel reflected(const SharpIntervalModel& model);

bool models_equal_up_to_symmetry(const SharpArcModel& a, const SharpArcModel& b,
                                 bool allow_reflection = true);
/// Equal, or equal after reflection when allowed.
bool models_equal_up_to_symmetry(const SharpIntervalModel& a, const SharpIntervalModel& b,
                                 bool allow_reflection = true);

/// The sharp proper interval model whose geometric order is `order`.
/// Throws NotRealizable when the result fails verification.
SharpIntervalModel reconstruct_interval(const Graph& g, const LinearOrder& order);
/// The sharp proper arc model with geometric order `order` and a_1 = 1.
/// Throws TooManyUniversalVertices or NotRealizable.
SharpArcModel reconstruct_arc(const Graph& g, const CircularOrder& order);

/// Orientation of every edge of a graph.
class Orientation {
 public:
  /// All edges undirected until `direct` is called.
  explicit Orientation(Graph graph);

  const Graph& graph() const noexcept { return graph_; }
  /// Direct the edge {u,v} as u -> v. Throws PreconditionViolated if not an edge.
  void direct(Vertex u, Vertex v);
  bool has_arc(Vertex u, Vertex v) const { return out_.at(u).test(v); }
  const VertexSet& out_neighbors(Vertex u) const { return out_.at(u); }
  VertexSet in_neighbors(Vertex u) const;
  /// Every edge has a direction.
  bool complete() const;
  Orientation reversed() const;

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  Graph graph_;
  std::vector<VertexSet> out_;
};

/// u -> v when the arc of u contains the start of the arc of v.
/// Throws AmbiguousDirection when two adjacent arcs contain both or neither
/// start of each other, which happens without properness or with two
/// universal vertices.
Orientation round_orientation(const SharpArcModel& model);
Orientation straight_orientation(const SharpIntervalModel& model);

/// Arc ordering of N[G] in which, for each v, [v-,v) are exactly its
/// in-neighbours and (v,v+] its out-neighbours. Throws NotAnArcOrdering or
/// UniversalVertex.
bool is_round_enumeration(const Orientation& d, const CircularOrder& order);
/// Interval analogue; universal vertices are allowed.
bool is_straight_enumeration(const Orientation& d, const LinearOrder& order);

}  // namespace arcrigid

#endif  // ARCRIGID_MODEL_HPP
