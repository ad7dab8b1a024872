// Brute-force enumeration of arc and interval orderings over 64-bit
// position masks. Only one representative per symmetry class is visited:
// vertex 0 is pinned to position 0 (circular) and the reflection is fixed by
// comparing the two ends, which makes each visited sequence canonical.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "arcrigid/ordering.hpp"
#include "ordering_internal.hpp"

namespace arcrigid {

namespace {

bool is_interval_mask(std::uint64_t m) {
  if (m == 0) return true;
  const std::uint64_t x = m >> std::countr_zero(m);
  return (x & (x + 1)) == 0;
}

class MaskOracle {
 public:
  MaskOracle(const Hypergraph& h, bool circular)
      : n_(h.size()), full_(n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1) {
    for (const auto& e : h.edges()) edges_.push_back(e.word());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (edges_[i] == 0) continue;
      for (std::size_t j = 0; j < edges_.size(); ++j) {
        if (i == j || (edges_[i] & ~edges_[j]) != 0) continue;
        if (circular && edges_[j] == full_) continue;
        inclusions_.emplace_back(i, j);
      }
    }
    pos_masks_.resize(edges_.size());
  }

  void load(const std::vector<Vertex>& seq) {
    std::uint64_t bit_of[64];
    for (std::size_t p = 0; p < n_; ++p) bit_of[seq[p]] = std::uint64_t{1} << p;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      std::uint64_t m = 0;
      std::uint64_t bits = edges_[e];
      while (bits != 0) {
        m |= bit_of[std::countr_zero(bits)];
        bits &= bits - 1;
      }
      pos_masks_[e] = m;
    }
  }

  bool all_arcs() const {
    for (auto m : pos_masks_) {
      if (!(m == full_ || is_interval_mask(m) || is_interval_mask(~m & full_))) return false;
    }
    return true;
  }

  bool all_intervals() const {
    return std::all_of(pos_masks_.begin(), pos_masks_.end(), is_interval_mask);
  }

  bool tight_circular() const {
    for (auto [i, j] : inclusions_) {
      const auto a = pos_masks_[i];
      const auto b = pos_masks_[j];
      if (((starts_circ(a) & starts_circ(b)) | (ends_circ(a) & ends_circ(b))) == 0) return false;
    }
    return true;
  }

  bool tight_linear() const {
    for (auto [i, j] : inclusions_) {
      const auto a = pos_masks_[i];
      const auto b = pos_masks_[j];
      const auto sa = a & ~(a << 1);
      const auto sb = b & ~(b << 1);
      const auto ea = a & ~(a >> 1);
      const auto eb = b & ~(b >> 1);
      if (((sa & sb) | (ea & eb)) == 0) return false;
    }
    return true;
  }

 private:
  std::uint64_t rot_up(std::uint64_t m) const {
    return ((m << 1) | (m >> (n_ - 1))) & full_;
  }
  std::uint64_t rot_down(std::uint64_t m) const {
    return ((m >> 1) | ((m & 1) << (n_ - 1))) & full_;
  }
  std::uint64_t starts_circ(std::uint64_t m) const { return m & ~rot_up(m); }
  std::uint64_t ends_circ(std::uint64_t m) const { return m & ~rot_down(m); }

  std::size_t n_;
  std::uint64_t full_;
  std::vector<std::uint64_t> edges_;
  std::vector<std::pair<std::size_t, std::size_t>> inclusions_;
  std::vector<std::uint64_t> pos_masks_;
};

void check_cap(std::size_t n, std::size_t cap_n) {
  if (n > cap_n || n > kEnumerationCeiling) {
    throw Error(ErrorKind::TooLarge, "enumeration over " + std::to_string(n) +
                                         " vertices exceeds the cap of " +
                                         std::to_string(std::min(cap_n, kEnumerationCeiling)));
  }
}

}  // namespace

namespace detail {

void for_each_circular_class(const Hypergraph& h, OrderingMode mode, std::size_t cap_n,
                             const std::function<bool(const std::vector<Vertex>&)>& visit) {
  const std::size_t n = h.size();
  check_cap(n, cap_n);
  MaskOracle oracle(h, true);
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), Vertex{0});
  auto accept = [&]() {
    oracle.load(seq);
    if (!oracle.all_arcs()) return false;
    return mode == OrderingMode::All || oracle.tight_circular();
  };
  if (n <= 2) {
    if (accept()) visit(seq);
    return;
  }
  do {
    if (seq[1] > seq[n - 1]) continue;
    if (accept() && !visit(seq)) return;
  } while (std::next_permutation(seq.begin() + 1, seq.end()));
}

void for_each_linear_class(const Hypergraph& h, OrderingMode mode, std::size_t cap_n,
                           const std::function<bool(const std::vector<Vertex>&)>& visit) {
  const std::size_t n = h.size();
  check_cap(n, cap_n);
  MaskOracle oracle(h, false);
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), Vertex{0});
  do {
    if (n >= 2 && seq[0] > seq[n - 1]) continue;
    oracle.load(seq);
    if (!oracle.all_intervals()) continue;
    if (mode == OrderingMode::TightOnly && !oracle.tight_linear()) continue;
    if (!visit(seq)) return;
  } while (std::next_permutation(seq.begin(), seq.end()));
}

}  // namespace detail

std::vector<CircularOrder> enumerate_arc_orderings(const Hypergraph& h, OrderingMode mode,
                                                   std::size_t cap_n) {
  std::vector<CircularOrder> out;
  detail::for_each_circular_class(h, mode, cap_n, [&](const std::vector<Vertex>& seq) {
    out.emplace_back(seq);
    return true;
  });
  return out;
}

std::vector<LinearOrder> enumerate_interval_orderings(const Hypergraph& h, OrderingMode mode,
                                                      std::size_t cap_n) {
  std::vector<LinearOrder> out;
  detail::for_each_linear_class(h, mode, cap_n, [&](const std::vector<Vertex>& seq) {
    out.emplace_back(seq);
    return true;
  });
  return out;
}

std::size_t count_arc_orderings(const Hypergraph& h, OrderingMode mode, std::size_t cap_n) {
  std::size_t count = 0;
  detail::for_each_circular_class(h, mode, cap_n, [&](const std::vector<Vertex>&) {
    ++count;
    return true;
  });
  return count;
}

std::size_t count_interval_orderings(const Hypergraph& h, OrderingMode mode,
                                     std::size_t cap_n) {
  std::size_t count = 0;
  detail::for_each_linear_class(h, mode, cap_n, [&](const std::vector<Vertex>&) {
    ++count;
    return true;
  });
  return count;
}

std::optional<VertexSet> quilliot_witness(const Hypergraph& h) {
  const std::size_t n = h.size();
  if (n > kEnumerationCeiling) {
    throw Error(ErrorKind::TooLarge, "Quilliot scan is limited to 20 vertices");
  }
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> edges;
  for (const auto& e : h.edges()) edges.push_back(e.word());
  for (std::uint64_t x = 1; x < full; ++x) {
    const int k = std::popcount(x);
    if (k <= 1 || static_cast<std::size_t>(k) + 1 >= n) continue;
    const bool hit = std::any_of(edges.begin(), edges.end(), [&](std::uint64_t e) {
      return (e & x) != 0 && (e & ~x) != 0 && (x & ~e) != 0 && (e | x) != full;
    });
    if (!hit) return VertexSet::from_word(n, x);
  }
  return std::nullopt;
}

bool quilliot_unique(const Hypergraph& h, const EnumerationCaps& caps) {
  if (h.size() > kEnumerationCeiling) {
    throw Error(ErrorKind::TooLarge, "Quilliot scan is limited to 20 vertices");
  }
  if (!solve_arc_ordering(h, caps)) {
    throw Error(ErrorKind::NotCA, "Quilliot's criterion presumes a circular-arc hypergraph");
  }
  return !quilliot_witness(h).has_value();
}

}  // namespace arcrigid
