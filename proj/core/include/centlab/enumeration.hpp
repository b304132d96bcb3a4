#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "centlab/graph.hpp"

namespace centlab {

/**
 * Exhaustive enumeration of all labeled n-node graphs as edge-subset
 * bitmasks, optionally filtered down to one canonical representative per
 * isomorphism class.
 *
 * Bit layout: pair k in lexicographic order (0,1),(0,2),...,(n-2,n-1) sits at
 * bit (P-1-k), P = n(n-1)/2, so ascending mask order equals lexicographic
 * order on the upper-triangle adjacency bit-string.
 */
std::uint64_t labeled_graph_count(NodeId n);
std::uint64_t mask_of_graph(const Graph &g);
Graph graph_from_mask(NodeId n, std::uint64_t mask);

/// Lexicographically minimal mask over all n! relabelings (branch-and-bound
/// with degree pruning). Supported for n <= 8.
std::uint64_t canonical_mask(const Graph &g);

/// Maximum n per mode: 7 labeled, 8 with isomorphism dedup.
constexpr NodeId kMaxLabeledEnumeration = 7;
constexpr NodeId kMaxDedupEnumeration = 8;

/// Streaming enumerator over the mask range [begin, end) for one n.
/// With dedup, only graphs equal to their canonical form are yielded.
class GraphEnumerator {
  public:
    /// Full range for n. Throws BudgetExceeded when n is out of range for the
    /// requested mode (or n < 1).
    GraphEnumerator(NodeId n, bool dedup_isomorphic);
    /// Sub-range [begin, end) of the mask space, for partitioned consumption.
    GraphEnumerator(NodeId n, bool dedup_isomorphic, std::uint64_t begin, std::uint64_t end);

    /// Next graph in ascending mask order, or nullopt when exhausted.
    std::optional<Graph> next();

    /// Mask of the most recently yielded graph.
    std::uint64_t current_mask() const { return last_mask_; }

  private:
    NodeId n_;
    bool dedup_;
    std::uint64_t next_mask_;
    std::uint64_t end_;
    std::uint64_t last_mask_ = 0;
};

/// Materialized convenience form of the same stream.
std::vector<Graph> enumerate_graphs(NodeId n, bool dedup_isomorphic);

} // namespace centlab
