#include "arcrigid/ordering.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace arcrigid {

namespace {

void check_permutation(const std::vector<Vertex>& seq) {
  if (seq.empty()) {
    throw Error(ErrorKind::PreconditionViolated, "an order needs at least one vertex");
  }
  std::vector<bool> seen(seq.size(), false);
  for (Vertex v : seq) {
    if (v >= seq.size() || seen[v]) {
      throw Error(ErrorKind::PreconditionViolated, "order is not a permutation of the universe");
    }
    seen[v] = true;
  }
}

std::vector<std::size_t> invert(const std::vector<Vertex>& seq) {
  std::vector<std::size_t> pos(seq.size());
  for (std::size_t p = 0; p < seq.size(); ++p) pos[seq[p]] = p;
  return pos;
}

VertexSet position_set(const VertexSet& edge, const std::vector<std::size_t>& pos) {
  VertexSet out(pos.size());
  edge.for_each([&](Vertex v) { out.set(pos[v]); });
  return out;
}

/// Arc covering exactly the positions in `p`, if they are circularly consecutive.
std::optional<Arc> arc_from_positions(const VertexSet& p) {
  const std::size_t m = p.universe();
  const std::size_t k = p.count();
  if (k == 0) return Arc::empty(m);
  if (k == m) return Arc::complete(m);
  std::size_t start = m;
  for (std::size_t q = 0; q < m; ++q) {
    if (p.test(q) && !p.test((q + m - 1) % m)) {
      start = q;
      break;
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!p.test((start + i) % m)) return std::nullopt;
  }
  return Arc::from_start(m, start, k);
}

std::optional<Segment> segment_from_positions(const VertexSet& p) {
  const std::size_t k = p.count();
  if (k == 0) return Segment{};
  const std::size_t first = p.first();
  for (std::size_t i = 0; i < k; ++i) {
    if (first + i >= p.universe() || !p.test(first + i)) return std::nullopt;
  }
  return Segment{first, k};
}

void check_universe(const Hypergraph& h, std::size_t order_size) {
  if (h.size() != order_size) {
    throw Error(ErrorKind::UniverseMismatch, "order and hypergraph have different universes");
  }
}

}  // namespace

CircularOrder::CircularOrder(std::vector<Vertex> sequence) : seq_(std::move(sequence)) {
  check_permutation(seq_);
}

CircularOrder CircularOrder::identity(std::size_t n) {
  std::vector<Vertex> seq(n);
  for (std::size_t i = 0; i < n; ++i) seq[i] = i;
  return CircularOrder(std::move(seq));
}

std::vector<std::size_t> CircularOrder::positions() const { return invert(seq_); }

CircularOrder CircularOrder::reversed() const {
  std::vector<Vertex> seq(seq_.rbegin(), seq_.rend());
  return CircularOrder(std::move(seq));
}

CircularOrder CircularOrder::rotated(std::size_t s) const {
  std::vector<Vertex> seq(seq_.size());
  for (std::size_t i = 0; i < seq_.size(); ++i) seq[i] = seq_[(i + s) % seq_.size()];
  return CircularOrder(std::move(seq));
}

LinearOrder::LinearOrder(std::vector<Vertex> sequence) : seq_(std::move(sequence)) {
  check_permutation(seq_);
}

LinearOrder LinearOrder::identity(std::size_t n) {
  std::vector<Vertex> seq(n);
  for (std::size_t i = 0; i < n; ++i) seq[i] = i;
  return LinearOrder(std::move(seq));
}

std::vector<std::size_t> LinearOrder::positions() const { return invert(seq_); }

LinearOrder LinearOrder::reversed() const {
  std::vector<Vertex> seq(seq_.rbegin(), seq_.rend());
  return LinearOrder(std::move(seq));
}

Arc Arc::from_start(std::size_t m, std::size_t start, std::size_t length) {
  if (m == 0 || length == 0 || length >= m || start >= m) {
    throw Error(ErrorKind::PreconditionViolated, "proper arc needs 1 <= length < m");
  }
  return Arc(Kind::Proper, m, start, length);
}

bool Arc::contains(std::size_t position) const noexcept {
  switch (kind_) {
    case Kind::Empty: return false;
    case Kind::Complete: return position < m_;
    case Kind::Proper: return (position + m_ - start_) % m_ < length_;
  }
  return false;
}

VertexSet Arc::positions() const {
  VertexSet out(m_);
  for (std::size_t i = 0; i < length_; ++i) out.set((start_ + i) % m_);
  return out;
}

EnumerationCaps EnumerationCaps::with_circular(std::size_t cap) {
  return EnumerationCaps{cap, cap == 0 ? 0 : cap - 1};
}

EnumerationCaps EnumerationCaps::from_environment() {
  if (const char* env = std::getenv("CA_RIGIDITY_CAP")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return with_circular(value);
  }
  return {};
}

std::optional<Arc> arc_of(const VertexSet& edge, const CircularOrder& order) {
  if (edge.universe() != order.size()) {
    throw Error(ErrorKind::UniverseMismatch, "hyperedge and order have different universes");
  }
  return arc_from_positions(position_set(edge, order.positions()));
}

std::optional<Segment> interval_of(const VertexSet& edge, const LinearOrder& order) {
  if (edge.universe() != order.size()) {
    throw Error(ErrorKind::UniverseMismatch, "hyperedge and order have different universes");
  }
  return segment_from_positions(position_set(edge, order.positions()));
}

bool is_arc_ordering(const Hypergraph& h, const CircularOrder& order) {
  check_universe(h, order.size());
  const auto pos = order.positions();
  return std::all_of(h.edges().begin(), h.edges().end(), [&](const VertexSet& e) {
    return arc_from_positions(position_set(e, pos)).has_value();
  });
}

bool is_tight_arc_ordering(const Hypergraph& h, const CircularOrder& order) {
  check_universe(h, order.size());
  const auto pos = order.positions();
  std::vector<Arc> arcs;
  arcs.reserve(h.edge_count());
  for (const auto& e : h.edges()) {
    auto arc = arc_from_positions(position_set(e, pos));
    if (!arc) throw Error(ErrorKind::NotAnArcOrdering, "some hyperedge is not an arc");
    arcs.push_back(*arc);
  }
  const auto& edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].empty()) continue;
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (i == j || edges[j].is_full() || !edges[i].is_subset_of(edges[j])) continue;
      // Both arcs are proper here: A nonempty, B != V, A ⊆ B.
      if (arcs[i].start() != arcs[j].start() && arcs[i].end() != arcs[j].end()) return false;
    }
  }
  return true;
}

bool is_interval_ordering(const Hypergraph& h, const LinearOrder& order) {
  check_universe(h, order.size());
  const auto pos = order.positions();
  return std::all_of(h.edges().begin(), h.edges().end(), [&](const VertexSet& e) {
    return segment_from_positions(position_set(e, pos)).has_value();
  });
}

bool is_tight_interval_ordering(const Hypergraph& h, const LinearOrder& order) {
  check_universe(h, order.size());
  const auto pos = order.positions();
  std::vector<Segment> segs;
  segs.reserve(h.edge_count());
  for (const auto& e : h.edges()) {
    auto seg = segment_from_positions(position_set(e, pos));
    if (!seg) throw Error(ErrorKind::NotAnIntervalOrdering, "some hyperedge is not an interval");
    segs.push_back(*seg);
  }
  const auto& edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].empty()) continue;
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (i == j || !edges[i].is_subset_of(edges[j])) continue;
      if (segs[i].first != segs[j].first && segs[i].last() != segs[j].last()) return false;
    }
  }
  return true;
}

CircularOrder canonical_circular(const CircularOrder& order) {
  const auto& s = order.sequence();
  const std::size_t n = s.size();
  std::vector<Vertex> best = s;
  std::vector<Vertex> cand(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) cand[i] = s[(r + i) % n];
    if (cand < best) best = cand;
    for (std::size_t i = 0; i < n; ++i) cand[i] = s[(r + n - i) % n];
    if (cand < best) best = cand;
  }
  return CircularOrder(std::move(best));
}

LinearOrder canonical_linear(const LinearOrder& order) {
  auto rev = order.reversed();
  return rev.sequence() < order.sequence() ? rev : order;
}

bool orders_equal_up_to_symmetry(const CircularOrder& a, const CircularOrder& b) {
  if (a.size() != b.size()) return false;
  return canonical_circular(a) == canonical_circular(b);
}

bool orders_equal_up_to_symmetry(const LinearOrder& a, const LinearOrder& b) {
  if (a.size() != b.size()) return false;
  return canonical_linear(a) == canonical_linear(b);
}

}  // namespace arcrigid
