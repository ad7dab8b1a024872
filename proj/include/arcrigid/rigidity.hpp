#ifndef ARCRIGID_RIGIDITY_HPP
#define ARCRIGID_RIGIDITY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arcrigid/hypergraph.hpp"
#include "arcrigid/ordering.hpp"

namespace arcrigid {

/// Which uniqueness question a verdict answers.
enum class RigidityKind { Arc, TightArc, Interval, TightInterval };

enum class RigidityStatus {
  UniqueArc,
  UniqueTightArc,
  UniqueInterval,
  UniqueTightInterval,
  NotUnique,
  NotCA,
  /// No tight arc ordering exists.
  NotTight,
  /// No (tight) interval ordering exists.
  NotInterval,
  SmallInstance,
};

/// What the verdict rests on.
enum class Basis {
  SmallInstance,
  NoOrdering,
  /// Stripped hypergraph twin-free and strictly overlap-connected (up to one
  /// isolated vertex).
  StrippedOverlapCriterion,
  /// H itself twin-free and strictly overlap-connected (no stripping).
  StrictOverlapConnectivity,
  TwinPair,
  Disconnection,
  /// Twin-free and strictly connected (tight arc) / connected (tight interval).
  TightConnectivity,
  /// Twin-free and overlap-connected interval hypergraph.
  OverlapConnectivity,
  OracleCount,
};

std::string_view to_string(RigidityKind k);
std::string_view to_string(RigidityStatus s);
std::string_view to_string(Basis b);

/// Machine-checkable evidence; which fields are set depends on `Basis`.
struct Witness {
  /// Two distinct twins of the analysed hypergraph.
  std::optional<std::pair<Vertex, Vertex>> twins;
  /// Two hyperedges lying in different relation components.
  std::optional<std::pair<VertexSet, VertexSet>> separated;
  /// Isolated vertices of the analysed hypergraph.
  std::optional<VertexSet> isolated;
  std::optional<std::size_t> oracle_classes;
  /// Two inequivalent orderings certifying non-uniqueness.
  std::vector<CircularOrder> circular_orders;
  std::vector<LinearOrder> linear_orders;
  /// A set strictly overlapped by no hyperedge (arc verdicts, n <= 16).
  std::optional<VertexSet> quilliot_set;
};

struct RigidityVerdict {
  RigidityKind kind;
  RigidityStatus status;
  Basis basis;
  Witness witness;
  /// Some ordering of the requested kind, when one exists.
  std::optional<CircularOrder> circular;
  std::optional<LinearOrder> linear;

  bool unique() const noexcept {
    return status == RigidityStatus::UniqueArc || status == RigidityStatus::UniqueTightArc ||
           status == RigidityStatus::UniqueInterval ||
           status == RigidityStatus::UniqueTightInterval;
  }
};

struct RigidityOptions {
  EnumerationCaps caps{};
  /// Arc verdicts only: skip removal of hyperedges of size 0, 1, n-1, n.
  /// The criterion is then applied to H itself and is no longer an iff, so
  /// failures fall back to the oracle.
  bool strip = true;
};

/// Uniqueness of arc orderings. SmallInstance for n <= 3.
RigidityVerdict arc_rigidity(const Hypergraph& h, const RigidityOptions& opt = {});
/// Uniqueness of tight arc orderings. Throws TooLarge when the sufficient
/// condition fails and n exceeds the cap.
RigidityVerdict tight_arc_rigidity(const Hypergraph& h, const RigidityOptions& opt = {});
/// Uniqueness of interval orderings. SmallInstance for n <= 2.
RigidityVerdict interval_rigidity(const Hypergraph& h, const RigidityOptions& opt = {});
RigidityVerdict tight_interval_rigidity(const Hypergraph& h, const RigidityOptions& opt = {});

struct Discrepancy {
  std::string check;
  std::string detail;
};

struct CrossValidation {
  RigidityKind kind;
  std::size_t oracle_classes = 0;
  /// Quilliot agreement (arc verdicts with n <= 7 only).
  std::optional<bool> quilliot;
  std::vector<Discrepancy> discrepancies;

  bool consistent() const noexcept { return discrepancies.empty(); }
};

/// Recount by enumeration and compare with `verdict`, including its witness.
/// Throws TooLarge above the cap.
CrossValidation cross_validate(const Hypergraph& h, const RigidityVerdict& verdict,
                               const EnumerationCaps& caps = {});

}  // namespace arcrigid

#endif  // ARCRIGID_RIGIDITY_HPP
