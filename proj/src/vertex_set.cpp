#include "arcrigid/vertex_set.hpp"

#include <algorithm>
#include <string>

namespace arcrigid {

namespace {

std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

std::uint64_t tail_mask(std::size_t n) {
  const std::size_t rem = n % 64;
  return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UniverseMismatch: return "UniverseMismatch";
    case ErrorKind::EmptyHyperedge: return "EmptyHyperedge";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotCA: return "NotCA";
    case ErrorKind::NotAnArcOrdering: return "NotAnArcOrdering";
    case ErrorKind::NotAnIntervalOrdering: return "NotAnIntervalOrdering";
    case ErrorKind::RelationViolated: return "RelationViolated";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::TooManyUniversalVertices: return "TooManyUniversalVertices";
    case ErrorKind::UniversalVertex: return "UniversalVertex";
    case ErrorKind::MalformedModel: return "MalformedModel";
    case ErrorKind::AmbiguousDirection: return "AmbiguousDirection";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

VertexSet::VertexSet(std::size_t universe) : n_(universe) {
  if (universe > kMaxUniverse) {
    throw Error(ErrorKind::TooLarge,
                "universe of " + std::to_string(universe) + " vertices exceeds " +
                    std::to_string(kMaxUniverse));
  }
  if (n_ > 64) wide_.assign(word_count(n_), 0);
}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) set(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  if (universe == 0) return s;
  auto ws = s.mutable_words();
  std::fill(ws.begin(), ws.end(), ~std::uint64_t{0});
  ws.back() &= tail_mask(universe);
  return s;
}

VertexSet VertexSet::from_indices(std::size_t universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) s.set(v);
  return s;
}

VertexSet VertexSet::from_word(std::size_t universe, std::uint64_t word) {
  if (universe > 64) {
    throw Error(ErrorKind::PreconditionViolated, "from_word needs a universe of at most 64");
  }
  VertexSet s(universe);
  s.small_ = universe == 64 ? word : word & ((std::uint64_t{1} << universe) - 1);
  return s;
}

void VertexSet::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw Error(ErrorKind::UniverseMismatch,
                "vertex " + std::to_string(v) + " outside universe of size " +
                    std::to_string(n_));
  }
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (n_ != other.n_) {
    throw Error(ErrorKind::UniverseMismatch,
                "vertex sets over universes of size " + std::to_string(n_) + " and " +
                    std::to_string(other.n_));
  }
}

void VertexSet::set(Vertex v) {
  check_vertex(v);
  mutable_words()[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::reset(Vertex v) {
  check_vertex(v);
  mutable_words()[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::size_t VertexSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words()) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const noexcept {
  for (auto w : words()) {
    if (w != 0) return false;
  }
  return true;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  auto a = words();
  auto b = other.words();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(other);
  auto a = words();
  auto b = other.words();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  auto a = mutable_words();
  auto b = other.words();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] |= b[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  auto a = mutable_words();
  auto b = other.words();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] &= b[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  auto a = mutable_words();
  auto b = other.words();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] &= ~b[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet out = full(n_);
  out -= *this;
  return out;
}

Vertex VertexSet::first() const noexcept {
  auto ws = words();
  for (std::size_t w = 0; w < ws.size(); ++w) {
    if (ws[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(ws[w]));
  }
  return n_;
}

std::vector<Vertex> VertexSet::indices() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
  if (a.n_ != b.n_) return false;
  auto x = a.words();
  auto y = b.words();
  return std::equal(x.begin(), x.end(), y.begin());
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) noexcept {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  auto x = a.words();
  auto y = b.words();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (auto c = x[i] <=> y[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t VertexSetHash::operator()(const VertexSet& s) const noexcept {
  std::size_t h = s.universe() * 0x9e3779b97f4a7c15ULL;
  for (auto w : s.words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace arcrigid
