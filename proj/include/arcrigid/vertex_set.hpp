#ifndef ARCRIGID_VERTEX_SET_HPP
#define ARCRIGID_VERTEX_SET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "arcrigid/error.hpp"

namespace arcrigid {

/// Index of a vertex in its universe. Labels live in the owning container.
using Vertex = std::size_t;

/// Largest supported universe. Universes up to 64 vertices stay in one
/// inline word; larger ones spill into a heap-allocated word array.
inline constexpr std::size_t kMaxUniverse = 4096;

/**
 * Fixed-universe bitset of vertices.
 *
 * Binary operations require both operands to share a universe size and throw
 * `ErrorKind::UniverseMismatch` otherwise.
 */
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

  static VertexSet full(std::size_t universe);
  static VertexSet from_indices(std::size_t universe, std::span<const Vertex> members);
  /// Build from the low `universe` bits of a word (requires universe <= 64).
  static VertexSet from_word(std::size_t universe, std::uint64_t word);

  std::size_t universe() const noexcept { return n_; }

  bool test(Vertex v) const noexcept {
    return (words()[v >> 6] >> (v & 63)) & 1u;
  }
  void set(Vertex v);
  void reset(Vertex v);

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept { return count() == n_; }

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Complement within the universe.
  VertexSet complement() const;

  /// Smallest member, or universe() when empty.
  Vertex first() const noexcept;

  std::vector<Vertex> indices() const;

  /// Low word; only meaningful for universes up to 64.
  std::uint64_t word() const noexcept { return small_; }

  std::span<const std::uint64_t> words() const noexcept {
    if (n_ <= 64) return {&small_, 1};
    return {wide_.data(), wide_.size()};
  }

  template <class F>
  void for_each(F&& f) const {
    auto ws = words();
    for (std::size_t w = 0; w < ws.size(); ++w) {
      std::uint64_t bits = ws[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept;
  /// Deterministic total order (universe first, then words as integers).
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) noexcept;

 private:
  std::span<std::uint64_t> mutable_words() noexcept {
    if (n_ <= 64) return {&small_, 1};
    return {wide_.data(), wide_.size()};
  }
  void check_same_universe(const VertexSet& other) const;
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::uint64_t small_ = 0;
  std::vector<std::uint64_t> wide_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept;
};

}  // namespace arcrigid

#endif  // ARCRIGID_VERTEX_SET_HPP
