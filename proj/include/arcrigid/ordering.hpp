#ifndef ARCRIGID_ORDERING_HPP
#define ARCRIGID_ORDERING_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "arcrigid/hypergraph.hpp"

namespace arcrigid {

/// Circular arrangement of the universe: position n-1 precedes position 0.
class CircularOrder {
 public:
  /// `sequence[p]` is the vertex at position p; must be a permutation of 0..n-1.
  explicit CircularOrder(std::vector<Vertex> sequence);
  static CircularOrder identity(std::size_t n);

  std::size_t size() const noexcept { return seq_.size(); }
  Vertex operator[](std::size_t position) const { return seq_[position]; }
  const std::vector<Vertex>& sequence() const noexcept { return seq_; }
  /// Inverse permutation: positions()[v] is the position of v.
  std::vector<std::size_t> positions() const;

  CircularOrder reversed() const;
  /// Shift so that position `s` becomes position 0.
  CircularOrder rotated(std::size_t s) const;

  friend bool operator==(const CircularOrder&, const CircularOrder&) = default;
  friend auto operator<=>(const CircularOrder&, const CircularOrder&) = default;

 private:
  std::vector<Vertex> seq_;
};

/// Linear arrangement of the universe.
class LinearOrder {
 public:
  explicit LinearOrder(std::vector<Vertex> sequence);
  static LinearOrder identity(std::size_t n);

  std::size_t size() const noexcept { return seq_.size(); }
  Vertex operator[](std::size_t position) const { return seq_[position]; }
  const std::vector<Vertex>& sequence() const noexcept { return seq_; }
  std::vector<std::size_t> positions() const;
  LinearOrder reversed() const;

  friend bool operator==(const LinearOrder&, const LinearOrder&) = default;
  friend auto operator<=>(const LinearOrder&, const LinearOrder&) = default;

 private:
  std::vector<Vertex> seq_;
};

/**
 * Arc of the circle C_m with positions 0..m-1, read clockwise from `start`.
 *
 * Besides proper arcs [start, end] there are the distinguished empty and
 * complete arcs, which have no endpoints.
 */
class Arc {
 public:
  enum class Kind { Empty, Proper, Complete };

  static Arc empty(std::size_t m) { return Arc(Kind::Empty, m, 0, 0); }
  static Arc complete(std::size_t m) { return Arc(Kind::Complete, m, 0, m); }
  /// Proper arc of `length` positions, 1 <= length < m.
  static Arc from_start(std::size_t m, std::size_t start, std::size_t length);

  Kind kind() const noexcept { return kind_; }
  bool is_proper() const noexcept { return kind_ == Kind::Proper; }
  std::size_t circle() const noexcept { return m_; }
  std::size_t length() const noexcept { return length_; }
  /// a-: first position clockwise. Proper arcs only.
  std::size_t start() const noexcept { return start_; }
  /// a+: last position clockwise. Proper arcs only.
  std::size_t end() const noexcept { return (start_ + length_ - 1) % m_; }

  bool contains(std::size_t position) const noexcept;
  /// Covered positions as a set over the universe {0..m-1}.
  VertexSet positions() const;

  friend bool operator==(const Arc&, const Arc&) = default;

 private:
  Arc(Kind kind, std::size_t m, std::size_t start, std::size_t length)
      : kind_(kind), m_(m), start_(start), length_(length) {}

  Kind kind_;
  std::size_t m_;
  std::size_t start_;
  std::size_t length_;
};

/// Run of consecutive positions in a linear order; length 0 is the empty run.
struct Segment {
  std::size_t first = 0;
  std::size_t length = 0;

  bool empty() const noexcept { return length == 0; }
  std::size_t last() const noexcept { return first + length - 1; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Hyperedges mapped to arcs of a circle of size m.
struct PlacedArcSystem {
  std::size_t circle = 0;
  std::vector<std::optional<Arc>> arc_of_edge;
};

enum class OrderingMode { All, TightOnly };

/// Enumeration limits. `from_environment` honours CA_RIGIDITY_CAP.
struct EnumerationCaps {
  std::size_t circular = 9;
  std::size_t linear = 8;

  static EnumerationCaps with_circular(std::size_t cap);
  static EnumerationCaps from_environment();
};

/// Hard ceiling for any brute-force enumeration regardless of caps.
inline constexpr std::size_t kEnumerationCeiling = 20;

/// The arc equal to `edge` in `order`; nullopt when not circularly consecutive.
/// The full set maps to the complete arc, never a rotated [a-, a+].
std::optional<Arc> arc_of(const VertexSet& edge, const CircularOrder& order);
std::optional<Segment> interval_of(const VertexSet& edge, const LinearOrder& order);

bool is_arc_ordering(const Hypergraph& h, const CircularOrder& order);
/// Throws NotAnArcOrdering when `order` is not an arc ordering.
bool is_tight_arc_ordering(const Hypergraph& h, const CircularOrder& order);
bool is_interval_ordering(const Hypergraph& h, const LinearOrder& order);
/// Throws NotAnIntervalOrdering when `order` is not an interval ordering.
bool is_tight_interval_ordering(const Hypergraph& h, const LinearOrder& order);

/// Lexicographically least sequence over all rotations and reflections.
CircularOrder canonical_circular(const CircularOrder& order);
/// Lexicographically least of the order and its reversal.
LinearOrder canonical_linear(const LinearOrder& order);
bool orders_equal_up_to_symmetry(const CircularOrder& a, const CircularOrder& b);
bool orders_equal_up_to_symmetry(const LinearOrder& a, const LinearOrder& b);

/// One canonical representative per symmetry class, sorted ascending.
/// Throws TooLarge when n exceeds `cap_n` or the hard ceiling.
std::vector<CircularOrder> enumerate_arc_orderings(const Hypergraph& h, OrderingMode mode,
                                                   std::size_t cap_n = 9);
std::vector<LinearOrder> enumerate_interval_orderings(const Hypergraph& h, OrderingMode mode,
                                                      std::size_t cap_n = 8);
/// Class counts without materializing the orders.
std::size_t count_arc_orderings(const Hypergraph& h, OrderingMode mode, std::size_t cap_n = 9);
std::size_t count_interval_orderings(const Hypergraph& h, OrderingMode mode,
                                     std::size_t cap_n = 8);

/**
 * Forced placement of a third hyperedge.
 *
 * Given arcs for A and B on a circle whose size equals the universe, with
 * A ⋈* B and B ⋈* H, return the arc that every (tight, when inclusions are
 * involved) representation extending the placement assigns to H.
 *
 * Throws RelationViolated when A, B, H do not form a strictly intersecting
 * path, PreconditionViolated when the given arcs do not match the sets, and
 * Inconsistent when the forced arc contradicts the placement of A.
 */
Arc extend_placement(const Arc& placed_a, const Arc& placed_b, const VertexSet& a,
                     const VertexSet& b, const VertexSet& h);

/// Some arc ordering, or nullopt when `h` is not circular-arc. Rejects empty
/// hyperedges. Uses the forced-extension solver when the nontrivial
/// hyperedges form a strictly connected core, enumeration otherwise.
std::optional<CircularOrder> solve_arc_ordering(const Hypergraph& h,
                                                const EnumerationCaps& caps = {});
/// Some tight arc ordering, or nullopt when none exists.
std::optional<CircularOrder> solve_tight_arc_ordering(const Hypergraph& h,
                                                      const EnumerationCaps& caps = {});
std::optional<LinearOrder> solve_interval_ordering(const Hypergraph& h,
                                                   const EnumerationCaps& caps = {});
std::optional<LinearOrder> solve_tight_interval_ordering(const Hypergraph& h,
                                                         const EnumerationCaps& caps = {});

/// A set X, 1 < |X| < n-1, strictly overlapped by no hyperedge (n <= 20).
std::optional<VertexSet> quilliot_witness(const Hypergraph& h);
/// Quilliot's uniqueness criterion. Throws NotCA for non-CA input and
/// TooLarge above 20 vertices.
bool quilliot_unique(const Hypergraph& h, const EnumerationCaps& caps = {});

}  // namespace arcrigid

#endif  // ARCRIGID_ORDERING_HPP
