#ifndef ARCRIGID_SRC_ORDERING_INTERNAL_HPP
#define ARCRIGID_SRC_ORDERING_INTERNAL_HPP

#include <functional>
#include <vector>

#include "arcrigid/ordering.hpp"

namespace arcrigid::detail {

/// Visit canonical representatives; `visit` returns false to stop early.
void for_each_circular_class(const Hypergraph& h, OrderingMode mode, std::size_t cap_n,
                             const std::function<bool(const std::vector<Vertex>&)>& visit);
void for_each_linear_class(const Hypergraph& h, OrderingMode mode, std::size_t cap_n,
                           const std::function<bool(const std::vector<Vertex>&)>& visit);

}  // namespace arcrigid::detail

#endif  // ARCRIGID_SRC_ORDERING_INTERNAL_HPP
