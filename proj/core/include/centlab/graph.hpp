#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "centlab/errors.hpp"

namespace centlab {

using NodeId = int;
using Edge = std::pair<NodeId, NodeId>; // stored normalized, first < second

/**
 * Immutable simple undirected graph on nodes 0..n-1.
 *
 * No self-loops, no duplicate edges; adjacency lists are sorted and kept
 * consistent with the edge set. All "mutation" returns a new value.
 */
class Graph {
  public:
    Graph() = default;

    /// Builds a graph from an edge list. Edges are normalized to (min,max)
    /// and deduplicated. Throws InvalidNode / SelfLoop.
    Graph(NodeId n, const std::vector<Edge> &edges);

    /// Returns a copy with the edge {u,v} added.
    /// Throws DuplicateEdge if present, SelfLoop if u == v.
    Graph with_edge(NodeId u, NodeId v) const;

    NodeId node_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Sorted normalized edge list.
    const std::vector<Edge> &edges() const { return edges_; }

    /// Sorted neighbor list of u. Throws InvalidNode.
    const std::vector<NodeId> &neighbors(NodeId u) const;

    int degree(NodeId u) const;
    bool has_edge(NodeId u, NodeId v) const;
    bool is_complete() const;

    /// Throws InvalidNode unless 0 <= u < n.
    void require_node(NodeId u) const;

    bool operator==(const Graph &other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

  private:
    NodeId n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<NodeId>> adjacency_;
};

/// Parses the edge-list text format: first line "n", then one "u v" pair per
/// line; blank lines and '#' comments allowed. Throws ParseError.
Graph parse_graph(const std::string &text);

/// Canonical edge-list text; parse(serialize(g)) == g.
std::string serialize_graph(const Graph &g);

/// JSON object form: {"n": <int>, "edges": [[u,v], ...]}.
Graph graph_from_json(const std::string &json_text);
std::string graph_to_json(const Graph &g);

} // namespace centlab
