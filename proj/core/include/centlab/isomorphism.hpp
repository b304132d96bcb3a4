#pragma once

#include <optional>
#include <vector>

#include "centlab/graph.hpp"

namespace centlab {

/// Bijection between two equal-sized node sets; forward[u] is the image of u.
struct NodeBijection {
    std::vector<NodeId> forward;

    std::vector<NodeId> inverse() const;
};

/// Relabels g through pi: edge {u,v} becomes {pi(u), pi(v)}.
/// Throws NotAPermutation if pi is not a permutation of 0..n-1.
Graph apply_permutation(const Graph &g, const NodeBijection &pi);

/**
 * Searches for an edge-preserving bijection g -> h by backtracking over
 * degree-compatible assignments. Returns nullopt when none exists (including
 * the node/edge count mismatch fast paths). Intended for n <= 10.
 */
std::optional<NodeBijection> find_isomorphism(const Graph &g, const Graph &h);

} // namespace centlab
