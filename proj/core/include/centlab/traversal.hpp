#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "centlab/graph.hpp"
#include "centlab/rational.hpp"

namespace centlab {

/**
 * BFS distances from one source. Unreachable nodes carry an empty optional,
 * never a large integer; consumers must handle it explicitly.
 */
struct DistanceVector {
    NodeId source = 0;
    std::vector<std::optional<int>> dist;

    bool reachable(NodeId v) const { return dist[static_cast<std::size_t>(v)].has_value(); }
    int at(NodeId v) const { return *dist[static_cast<std::size_t>(v)]; }
};

DistanceVector shortest_distances(const Graph &g, NodeId source);

/// Partition of V into maximal connected blocks.
struct ComponentPartition {
    std::vector<std::vector<NodeId>> blocks;
    std::vector<int> component_of; // node -> block index
};

ComponentPartition connected_components(const Graph &g);

/// Subgraph induced by the component of a node, with both relabeling maps.
struct InducedComponent {
    Graph graph;
    std::vector<NodeId> to_parent; // sub node -> original node (sorted)
    std::vector<NodeId> to_sub;    // original node -> sub node, or -1 outside
};

InducedComponent induced_component(const Graph &g, NodeId u);

/// Nodes grouped by exact BFS distance from a node, or by minimum distance
/// from an unordered node pair. layers[h] is H^h; layer 0 is the anchor set.
struct HopPartition {
    std::variant<NodeId, std::pair<NodeId, NodeId>> anchor;
    std::vector<std::vector<NodeId>> layers;
    std::vector<NodeId> unreachable;
};

HopPartition hop_partition(const Graph &g, NodeId u);
HopPartition hop_partition(const Graph &g, NodeId u, NodeId v);

/**
 * Counts of distinct shortest paths from one source.
 * sigma[source] = 1; sigma[v] = sum of sigma[w] over predecessors w on the
 * BFS dag; sigma[v] = 0 for unreachable v.
 */
struct PathCountTable {
    NodeId source = 0;
    std::vector<BigInt> sigma;
    DistanceVector dist;
};

PathCountTable shortest_path_counts(const Graph &g, NodeId source);

} // namespace centlab
