#ifndef ARCRIGID_PCA_HPP
#define ARCRIGID_PCA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arcrigid/graph.hpp"
#include "arcrigid/model.hpp"
#include "arcrigid/ordering.hpp"

namespace arcrigid {

struct PcaRecognition {
  bool is_pca = false;
  /// Tight arc ordering of N[G] when `is_pca`.
  std::optional<CircularOrder> tight_order;
};

struct ProperIntervalRecognition {
  bool is_pi = false;
  std::optional<LinearOrder> tight_order;
};

/// Solved on the twin-collapsed graph; twins are put back next to their
/// representative in ascending index order. Throws TooLarge when only
/// enumeration applies and the collapsed graph exceeds the cap.
PcaRecognition recognize_pca(const Graph& g, const EnumerationCaps& caps = {});
ProperIntervalRecognition recognize_proper_interval(const Graph& g,
                                                    const EnumerationCaps& caps = {});

/// N[u] = [minus[u], plus[u]] in an arc ordering of N[G].
struct NeighborhoodArcs {
  std::vector<Vertex> minus;
  std::vector<Vertex> plus;
};

/// Throws NotAnArcOrdering or UniversalVertex.
NeighborhoodArcs neighborhood_arcs(const Graph& g, const CircularOrder& order);

struct LemmaCheck {
  std::string name;
  bool passed = true;
  /// First counterexample, empty when passed.
  std::string counterexample;
};

struct StructuralReport {
  std::vector<LemmaCheck> checks;
  bool all_passed() const;
};

/**
 * Checks, for a PCA graph with non-bipartite complement and an arc ordering
 * of N[G]: the clique property of [u-,u] and [u,u+], tightness of the order,
 * and the three parts of the relative position rules for N[u] and N[v].
 *
 * Throws PreconditionViolated naming the failed hypothesis, NotAnArcOrdering
 * when `order` is not an arc ordering of N[G].
 */
StructuralReport check_structural_lemmas(const Graph& g, const CircularOrder& order,
                                         const EnumerationCaps& caps = {});

/// N[G] forms a single strict-intersection component without isolated vertices.
bool strict_connectedness_of_neighborhoods(const Graph& g);

enum class NrigidCase { SmallInstance, NonBipartiteComplement, BipartiteConnectedComplement, Other };
std::string_view to_string(NrigidCase c);

struct NrigidVerdict {
  NrigidCase kind = NrigidCase::Other;
  /// Constructed tight orderings: one for a non-bipartite complement, the
  /// two merges for a connected bipartite complement.
  std::vector<CircularOrder> tight_orders;
  /// Counts the structure guarantees; unset for Other and SmallInstance.
  std::optional<std::size_t> claimed_tight_classes;
  std::optional<std::size_t> claimed_all_classes;
  /// Enumeration counts, present when n is within the cap.
  std::optional<std::size_t> oracle_tight_classes;
  std::optional<std::size_t> oracle_all_classes;
};

/// Throws PreconditionViolated unless G is twin-free, connected and PCA
/// (graphs on at most 3 vertices are reported as SmallInstance first).
NrigidVerdict nrigid_verdict(const Graph& g, const EnumerationCaps& caps = {});

/// Removes the hyperedges of size n-1 from N[G] and reports whether the rest
/// is twin-free and strictly overlap-connected. Throws PreconditionViolated
/// unless G is twin-free, connected, PCA with non-bipartite complement.
bool theorem_ovconn_check(const Graph& g, const EnumerationCaps& caps = {});

/// u_1..u_m, v_1..v_m with u_i ~ v_j iff i <= j.
Graph gen_half_graph(std::size_t m);
Graph gen_half_graph_complement(std::size_t m);

struct GeneratedPca {
  Graph graph;
  SharpArcModel model;
};

/// The 3k-1 vertex family with k vertices of degree n-2. Requires k >= 2.
GeneratedPca gen_gk(std::size_t k);
/// Six vertices a b c x y z.
Graph gen_fig_example();

struct RandomPcaOptions {
  /// Drop all but the smallest vertex of each twin class; the result may
  /// then have fewer than n vertices.
  bool twin_free = false;
};

/// Intersection graph of a random sharp proper arc model. Arcs cover about
/// density/2 of the circle each; `density` must lie in (0,1].
GeneratedPca gen_random_pca(std::size_t n, double density, std::uint64_t seed,
                            const RandomPcaOptions& options = {});

struct GeneratedProperInterval {
  Graph graph;
  SharpIntervalModel model;
};

GeneratedProperInterval gen_random_proper_interval(std::size_t n, double density,
                                                   std::uint64_t seed);

}  // namespace arcrigid

#endif  // ARCRIGID_PCA_HPP
