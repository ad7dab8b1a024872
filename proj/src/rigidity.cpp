#include "arcrigid/rigidity.hpp"

#include <string>
#include <type_traits>

namespace arcrigid {

namespace {

template <class Order>
Order swapped(const Order& o, Vertex u, Vertex v) {
  auto seq = o.sequence();
  const auto pos = o.positions();
  std::swap(seq[pos[u]], seq[pos[v]]);
  return Order(std::move(seq));
}

RigidityVerdict make(RigidityKind kind, RigidityStatus status, Basis basis) {
  return RigidityVerdict{kind, status, basis, {}, std::nullopt, std::nullopt};
}

RigidityStatus unique_status(RigidityKind kind) {
  switch (kind) {
    case RigidityKind::Arc: return RigidityStatus::UniqueArc;
    case RigidityKind::TightArc: return RigidityStatus::UniqueTightArc;
    case RigidityKind::Interval: return RigidityStatus::UniqueInterval;
    case RigidityKind::TightInterval: return RigidityStatus::UniqueTightInterval;
  }
  return RigidityStatus::NotUnique;
}

bool circular_kind(RigidityKind kind) {
  return kind == RigidityKind::Arc || kind == RigidityKind::TightArc;
}

OrderingMode mode_of(RigidityKind kind) {
  return kind == RigidityKind::TightArc || kind == RigidityKind::TightInterval
             ? OrderingMode::TightOnly
             : OrderingMode::All;
}

/// Decide by enumeration; fills status, basis and witness.
void settle_by_oracle(RigidityVerdict& v, const Hypergraph& h, const EnumerationCaps& caps) {
  const auto mode = mode_of(v.kind);
  v.basis = Basis::OracleCount;
  if (circular_kind(v.kind)) {
    auto orders = enumerate_arc_orderings(h, mode, caps.circular);
    v.witness.oracle_classes = orders.size();
    if (orders.size() >= 2) {
      v.status = RigidityStatus::NotUnique;
      v.witness.circular_orders = {orders[0], orders[1]};
    } else {
      v.status = unique_status(v.kind);
    }
  } else {
    auto orders = enumerate_interval_orderings(h, mode, caps.linear);
    v.witness.oracle_classes = orders.size();
    if (orders.size() >= 2) {
      v.status = RigidityStatus::NotUnique;
      v.witness.linear_orders = {orders[0], orders[1]};
    } else {
      v.status = unique_status(v.kind);
    }
  }
}

std::pair<VertexSet, VertexSet> separated_pair(const Hypergraph& h, const RelationComponents& rc) {
  return {h.edges()[rc.components[0][0]], h.edges()[rc.components[1][0]]};
}

void reject_empty(const Hypergraph& h) {
  if (h.has_empty_edge()) {
    throw Error(ErrorKind::EmptyHyperedge, "rigidity analysis does not accept the empty hyperedge");
  }
}

/// Shared tail of the tight and interval verdicts: once an ordering exists,
/// apply the sufficient condition, certify twins directly, else count.
template <class Order>
void finish_with_twins_or_oracle(RigidityVerdict& v, const Hypergraph& h, const Order& order,
                                 bool condition_holds, Basis condition_basis,
                                 std::size_t twin_certificate_min_n, const EnumerationCaps& caps) {
  const auto twin = find_twin_pair(h);
  if (!twin && condition_holds) {
    v.status = unique_status(v.kind);
    v.basis = condition_basis;
    return;
  }
  // Transposing two twins yields another ordering; it differs from every
  // rotation or reflection once n is large enough (a transposition moves two
  // positions, a nontrivial symmetry moves at least n-2 of them).
  if (twin && h.size() >= twin_certificate_min_n) {
    v.status = RigidityStatus::NotUnique;
    v.basis = Basis::TwinPair;
    v.witness.twins = twin;
    auto other = swapped(order, twin->first, twin->second);
    if constexpr (std::is_same_v<Order, CircularOrder>) {
      v.witness.circular_orders = {order, other};
    } else {
      v.witness.linear_orders = {order, other};
    }
    return;
  }
  settle_by_oracle(v, h, caps);
  if (twin) v.witness.twins = twin;
}

}  // namespace

std::string_view to_string(RigidityKind k) {
  switch (k) {
    case RigidityKind::Arc: return "arc";
    case RigidityKind::TightArc: return "tight-arc";
    case RigidityKind::Interval: return "interval";
    case RigidityKind::TightInterval: return "tight-interval";
  }
  return "?";
}

std::string_view to_string(RigidityStatus s) {
  switch (s) {
    case RigidityStatus::UniqueArc: return "UniqueArc";
    case RigidityStatus::UniqueTightArc: return "UniqueTightArc";
    case RigidityStatus::UniqueInterval: return "UniqueInterval";
    case RigidityStatus::UniqueTightInterval: return "UniqueTightInterval";
    case RigidityStatus::NotUnique: return "NotUnique";
    case RigidityStatus::NotCA: return "NotCA";
    case RigidityStatus::NotTight: return "NotTight";
    case RigidityStatus::NotInterval: return "NotInterval";
    case RigidityStatus::SmallInstance: return "SmallInstance";
  }
  return "?";
}

std::string_view to_string(Basis b) {
  switch (b) {
    case Basis::SmallInstance: return "small-instance";
    case Basis::NoOrdering: return "no-ordering";
    case Basis::StrippedOverlapCriterion: return "stripped-strict-overlap-connectivity";
    case Basis::StrictOverlapConnectivity: return "strict-overlap-connectivity";
    case Basis::TwinPair: return "twin-pair";
    case Basis::Disconnection: return "disconnection";
    case Basis::TightConnectivity: return "tight-connectivity";
    case Basis::OverlapConnectivity: return "overlap-connectivity";
    case Basis::OracleCount: return "oracle-count";
  }
  return "?";
}

RigidityVerdict arc_rigidity(const Hypergraph& h, const RigidityOptions& opt) {
  reject_empty(h);
  const std::size_t n = h.size();
  if (n <= 3) {
    // Every circular order of at most three vertices is the same up to symmetry.
    auto v = make(RigidityKind::Arc, RigidityStatus::SmallInstance, Basis::SmallInstance);
    v.circular = CircularOrder::identity(n);
    return v;
  }
  auto order = solve_arc_ordering(h, opt.caps);
  if (!order) return make(RigidityKind::Arc, RigidityStatus::NotCA, Basis::NoOrdering);

  auto v = make(RigidityKind::Arc, RigidityStatus::NotUnique, Basis::OracleCount);
  v.circular = order;

  if (!opt.strip) {
    if (is_twin_free(h) && relation_components(h, EdgeRelation::StrictOverlap).connected()) {
      v.status = RigidityStatus::UniqueArc;
      v.basis = Basis::StrictOverlapConnectivity;
    } else {
      settle_by_oracle(v, h, opt.caps);
    }
    return v;
  }

  const auto stripped = strip_trivial_hyperedges(h);
  const auto rc = relation_components(stripped, EdgeRelation::StrictOverlap);
  if (auto twin = find_twin_pair(stripped)) {
    v.basis = Basis::TwinPair;
    v.witness.twins = twin;
    // Stripped hyperedges do not constrain arc orderings, so the swap is an
    // arc ordering of H as well.
    if (n >= 5) v.witness.circular_orders = {*order, swapped(*order, twin->first, twin->second)};
  } else if (rc.components.size() == 1 && rc.isolated_vertices.count() <= 1) {
    v.status = RigidityStatus::UniqueArc;
    v.basis = Basis::StrippedOverlapCriterion;
    v.witness.isolated = rc.isolated_vertices;
    return v;
  } else {
    // Twin-free with n >= 4 leaves at most one isolated vertex and at least
    // one hyperedge, so the failure is a split into components.
    v.basis = Basis::Disconnection;
    v.witness.separated = separated_pair(stripped, rc);
  }
  if (n <= 16) v.witness.quilliot_set = quilliot_witness(h);
  return v;
}

RigidityVerdict tight_arc_rigidity(const Hypergraph& h, const RigidityOptions& opt) {
  reject_empty(h);
  const std::size_t n = h.size();
  if (n <= 3) {
    auto v = make(RigidityKind::TightArc, RigidityStatus::SmallInstance, Basis::SmallInstance);
    v.circular = CircularOrder::identity(n);
    return v;
  }
  auto order = solve_tight_arc_ordering(h, opt.caps);
  if (!order) return make(RigidityKind::TightArc, RigidityStatus::NotTight, Basis::NoOrdering);
  auto v = make(RigidityKind::TightArc, RigidityStatus::NotUnique, Basis::OracleCount);
  v.circular = order;
  // V strictly intersects every hyperedge but imposes no tightness
  // constraint, so connectivity through V proves nothing.
  const bool connected =
      relation_components(without_complete_edge(h), EdgeRelation::StrictIntersect).connected();
  finish_with_twins_or_oracle(v, h, *order, connected, Basis::TightConnectivity, 5, opt.caps);
  return v;
}

RigidityVerdict interval_rigidity(const Hypergraph& h, const RigidityOptions& opt) {
  reject_empty(h);
  const std::size_t n = h.size();
  if (n <= 2) {
    auto v = make(RigidityKind::Interval, RigidityStatus::SmallInstance, Basis::SmallInstance);
    v.linear = LinearOrder::identity(n);
    return v;
  }
  auto order = solve_interval_ordering(h, opt.caps);
  if (!order) return make(RigidityKind::Interval, RigidityStatus::NotInterval, Basis::NoOrdering);
  auto v = make(RigidityKind::Interval, RigidityStatus::NotUnique, Basis::OracleCount);
  v.linear = order;
  const bool connected = relation_components(h, EdgeRelation::Overlap).connected();
  finish_with_twins_or_oracle(v, h, *order, connected, Basis::OverlapConnectivity, 4, opt.caps);
  return v;
}

RigidityVerdict tight_interval_rigidity(const Hypergraph& h, const RigidityOptions& opt) {
  reject_empty(h);
  const std::size_t n = h.size();
  if (n <= 2) {
    auto v =
        make(RigidityKind::TightInterval, RigidityStatus::SmallInstance, Basis::SmallInstance);
    v.linear = LinearOrder::identity(n);
    return v;
  }
  auto order = solve_tight_interval_ordering(h, opt.caps);
  if (!order) {
    return make(RigidityKind::TightInterval, RigidityStatus::NotInterval, Basis::NoOrdering);
  }
  auto v = make(RigidityKind::TightInterval, RigidityStatus::NotUnique, Basis::OracleCount);
  v.linear = order;
  const bool connected = relation_components(h, EdgeRelation::Intersect).connected();
  finish_with_twins_or_oracle(v, h, *order, connected, Basis::TightConnectivity, 4, opt.caps);
  return v;
}

CrossValidation cross_validate(const Hypergraph& h, const RigidityVerdict& verdict,
                               const EnumerationCaps& caps) {
  CrossValidation out;
  out.kind = verdict.kind;
  const auto mode = mode_of(verdict.kind);
  const bool circular = circular_kind(verdict.kind);
  const std::size_t n = h.size();
  out.oracle_classes = circular ? count_arc_orderings(h, mode, caps.circular)
                                : count_interval_orderings(h, mode, caps.linear);
  const auto count = out.oracle_classes;
  auto flag = [&](std::string check, std::string detail) {
    out.discrepancies.push_back({std::move(check), std::move(detail)});
  };
  const std::string counted = "oracle counted " + std::to_string(count) + " classes";

  switch (verdict.status) {
    case RigidityStatus::SmallInstance:
      if (count != 1) flag("small-instance", counted);
      break;
    case RigidityStatus::NotCA:
    case RigidityStatus::NotTight:
    case RigidityStatus::NotInterval:
      if (count != 0) flag("existence", counted);
      break;
    case RigidityStatus::NotUnique:
      if (count < 2) flag("non-uniqueness", counted);
      break;
    default:
      if (count != 1) flag("uniqueness", counted);
      break;
  }

  const auto& w = verdict.witness;
  if (w.oracle_classes && *w.oracle_classes != count) {
    flag("witness-oracle-count", "verdict recorded " + std::to_string(*w.oracle_classes));
  }
  const Hypergraph analysed = verdict.kind == RigidityKind::Arc && n >= 4
                                  ? strip_trivial_hyperedges(h)
                                  : h;
  if (w.twins) {
    bool twins = w.twins->first != w.twins->second;
    for (const auto& e : analysed.edges()) {
      if (e.test(w.twins->first) != e.test(w.twins->second)) twins = false;
    }
    if (!twins) flag("witness-twins", "reported pair is not a pair of twins");
  }
  if (w.separated) {
    EdgeRelation rel = EdgeRelation::StrictOverlap;
    Hypergraph scope = analysed;
    switch (verdict.kind) {
      case RigidityKind::Arc: rel = EdgeRelation::StrictOverlap; break;
      case RigidityKind::TightArc:
        rel = EdgeRelation::StrictIntersect;
        scope = without_complete_edge(h);
        break;
      case RigidityKind::Interval: rel = EdgeRelation::Overlap; break;
      case RigidityKind::TightInterval: rel = EdgeRelation::Intersect; break;
    }
    const auto rc = relation_components(scope, rel);
    auto component_of = [&](const VertexSet& e) -> std::optional<std::size_t> {
      for (std::size_t c = 0; c < rc.components.size(); ++c) {
        for (auto idx : rc.components[c]) {
          if (scope.edges()[idx] == e) return c;
        }
      }
      return std::nullopt;
    };
    const auto ca = component_of(w.separated->first);
    const auto cb = component_of(w.separated->second);
    if (!ca || !cb || *ca == *cb) flag("witness-separation", "hyperedges share a component");
  }
  if (w.quilliot_set) {
    const auto& x = *w.quilliot_set;
    const std::size_t k = x.count();
    bool ok = k > 1 && k + 1 < n;
    for (const auto& e : h.edges()) {
      if (strictly_overlaps(e, x)) ok = false;
    }
    if (!ok) flag("witness-quilliot", "set is strictly overlapped or has the wrong size");
  }
  auto check_pair = [&](const auto& orders, auto valid) {
    if (orders.empty()) return;
    if (orders.size() != 2 || orders_equal_up_to_symmetry(orders[0], orders[1])) {
      flag("witness-orders", "orders are not two distinct classes");
    }
    for (const auto& o : orders) {
      if (!valid(o)) flag("witness-orders", "reported order is not valid");
    }
  };
  check_pair(w.circular_orders, [&](const CircularOrder& o) {
    if (mode == OrderingMode::All) return is_arc_ordering(h, o);
    return is_arc_ordering(h, o) && is_tight_arc_ordering(h, o);
  });
  check_pair(w.linear_orders, [&](const LinearOrder& o) {
    if (mode == OrderingMode::All) return is_interval_ordering(h, o);
    return is_interval_ordering(h, o) && is_tight_interval_ordering(h, o);
  });

  if (verdict.kind == RigidityKind::Arc && n >= 4 && n <= 7 && count > 0) {
    const bool q = !quilliot_witness(h).has_value();
    out.quilliot = q;
    if (q != (count == 1)) flag("quilliot", "criterion disagrees with " + counted);
  }
  return out;
}

}  // namespace arcrigid
