#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dcdsum/integer_set.hpp"

namespace dcdsum {

/// Which translate an edge of a sum graph came from: the edge joins
/// a[a_index] + b[b_index] to a[a_index + 1] + b[b_index] (0-based).
struct TranslateLabel {
  std::size_t a_index = 0;
  std::size_t b_index = 0;

  bool operator==(const TranslateLabel&) const = default;
};

/// Edge drawn as an upper semicircle between vertices u < v.
struct ArcEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::optional<TranslateLabel> label;

  bool operator==(const ArcEdge&) const = default;
};

/// Vertices on a line at strictly increasing positions; edges are arcs above
/// the line. Only the order of the positions matters for every count below,
/// so vertex indices double as ranks.
class ArcGraph {
 public:
  /// Throws std::invalid_argument unless positions strictly increase and
  /// every edge has u < v < positions.size().
  ArcGraph(std::vector<Integer> positions, std::vector<ArcEdge> edges);

  /// Positions 0, 1, ..., vertex_count - 1.
  static ArcGraph with_unit_positions(std::size_t vertex_count, std::vector<ArcEdge> edges);

  std::span<const Integer> positions() const noexcept { return positions_; }
  std::span<const ArcEdge> edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return positions_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_parallel_edges() const;
  bool fully_labelled() const;

 private:
  std::vector<Integer> positions_;
  std::vector<ArcEdge> edges_;
};

struct CrossingStats {
  std::uint64_t crossings = 0;
  std::uint64_t intersections = 0;
  std::uint64_t max_translate_pair_crossings = 0;
  std::vector<std::uint64_t> degree_sequence;

  bool operator==(const CrossingStats&) const = default;
};

/// Vertices are A + B; for each b_j and each consecutive pair a_i, a_{i+1}
/// one arc from a_i + b_j to a_{i+1} + b_j. Edges are ordered by b_index,
/// then a_index. Parallel edges are kept. Throws if |A| < 2.
ArcGraph build_sum_graph(const IntegerSet& a, const IntegerSet& b);

/// Pairs of edges whose endpoints strictly interleave, by direct pair scan.
std::uint64_t count_crossings_oracle(const ArcGraph& graph);

/// Same value as the oracle in O(m log m): sweep left endpoints in groups,
/// querying a Fenwick tree over right endpoints for arcs that start earlier
/// and end strictly inside the current arc.
std::uint64_t count_crossings_fast(const ArcGraph& graph);

/// Vertex-disjoint pairs whose open intervals overlap (crossing or nested),
/// by direct pair scan.
std::uint64_t count_intersections(const ArcGraph& graph);

/// Same value as count_intersections in O(m log m): all pairs minus
/// separated pairs minus overlapping pairs that share an endpoint.
std::uint64_t count_intersections_fast(const ArcGraph& graph);

/// Largest crossing count between the edges of two distinct translates.
/// Throws std::invalid_argument if any edge is unlabelled.
std::uint64_t max_translate_pair_crossings(const ArcGraph& graph);

/// Vertex degrees, nonincreasing; parallel edges counted with multiplicity.
std::vector<std::uint64_t> degree_sequence(const ArcGraph& graph);

/// All four statistics; intersections use the fast path. The translate-pair
/// maximum is 0 for graphs without labels.
CrossingStats crossing_stats(const ArcGraph& graph);

/// Crossings among the given subset of edges (indices into graph.edges()).
std::uint64_t count_crossings_among(const ArcGraph& graph, std::span<const std::size_t> edge_ids);

}  // namespace dcdsum
