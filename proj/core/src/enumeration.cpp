#include "centlab/enumeration.hpp"

#include <algorithm>
#include <numeric>

namespace centlab {

namespace {

constexpr NodeId kMaxMaskNodes = 11; // P = n(n-1)/2 must fit in 64 bits

std::size_t pair_count(NodeId n) {
    return static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
}

// Lexicographic index of pair (i,j), i < j, in row-major upper-triangle order.
std::size_t pair_index(NodeId i, NodeId j, NodeId n) {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) -
           static_cast<std::size_t>(i) * (static_cast<std::size_t>(i) + 1) / 2 +
           static_cast<std::size_t>(j - i) - 1;
}

// Pair k occupies bit (P-1-k) so ascending mask == lexicographic bit-string.
std::uint64_t pair_bit(NodeId i, NodeId j, NodeId n) {
    return std::uint64_t{1} << (pair_count(n) - 1 - pair_index(i, j, n));
}

void require_mask_range(NodeId n) {
    if (n < 1) {
        throw InvalidParameter("graph enumeration requires n >= 1");
    }
    if (n > kMaxMaskNodes) {
        throw BudgetExceeded("edge bitmasks support at most " + std::to_string(kMaxMaskNodes) +
                             " nodes");
    }
}

} // namespace

std::uint64_t labeled_graph_count(NodeId n) {
    require_mask_range(n);
    return std::uint64_t{1} << pair_count(n);
}

std::uint64_t mask_of_graph(const Graph &g) {
    require_mask_range(std::max<NodeId>(g.node_count(), 1));
    std::uint64_t mask = 0;
    for (const auto &[u, v] : g.edges()) {
        mask |= pair_bit(u, v, g.node_count());
    }
    return mask;
}

Graph graph_from_mask(NodeId n, std::uint64_t mask) {
    require_mask_range(n);
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            if (mask & pair_bit(i, j, n)) {
                edges.emplace_back(i, j);
            }
        }
    }
    return Graph(n, edges);
}

std::uint64_t canonical_mask(const Graph &g) {
    const NodeId n = g.node_count();
    if (n > kMaxDedupEnumeration) {
        throw BudgetExceeded("canonical form supported up to n = " +
                             std::to_string(kMaxDedupEnumeration));
    }
    if (n < 2) {
        return 0;
    }

    int min_degree = n;
    for (NodeId v = 0; v < n; ++v) {
        min_degree = std::min(min_degree, g.degree(v));
    }

    std::vector<NodeId> placement(static_cast<std::size_t>(n));
    std::iota(placement.begin(), placement.end(), 0);
    std::vector<NodeId> position(static_cast<std::size_t>(n));

    std::uint64_t best = ~std::uint64_t{0};
    do {
        // Only a minimum-degree node at position 0 can produce the most
        // leading zeros in row 0 of the bit-string.
        if (g.degree(placement[0]) != min_degree) {
            continue;
        }
        for (NodeId pos = 0; pos < n; ++pos) {
            position[static_cast<std::size_t>(placement[static_cast<std::size_t>(pos)])] = pos;
        }
        std::uint64_t mask = 0;
        for (const auto &[u, v] : g.edges()) {
            const NodeId a = position[static_cast<std::size_t>(u)];
            const NodeId b = position[static_cast<std::size_t>(v)];
            mask |= pair_bit(std::min(a, b), std::max(a, b), n);
        }
        best = std::min(best, mask);
    } while (std::next_permutation(placement.begin(), placement.end()));
    return best;
}

GraphEnumerator::GraphEnumerator(NodeId n, bool dedup_isomorphic)
    : GraphEnumerator(n, dedup_isomorphic, 0, labeled_graph_count(n)) {}

GraphEnumerator::GraphEnumerator(NodeId n, bool dedup_isomorphic, std::uint64_t begin,
                                 std::uint64_t end)
    : n_(n), dedup_(dedup_isomorphic), next_mask_(begin), end_(end) {
    if (n < 1) {
        throw InvalidParameter("graph enumeration requires n >= 1");
    }
    const NodeId cap = dedup_isomorphic ? kMaxDedupEnumeration : kMaxLabeledEnumeration;
    if (n > cap) {
        throw BudgetExceeded("exhaustive enumeration capped at n = " + std::to_string(cap) +
                             (dedup_isomorphic ? " with dedup" : " labeled"));
    }
    end_ = std::min(end_, labeled_graph_count(n));
}

std::optional<Graph> GraphEnumerator::next() {
    while (next_mask_ < end_) {
        const std::uint64_t mask = next_mask_++;
        Graph g = graph_from_mask(n_, mask);
        if (dedup_ && canonical_mask(g) != mask) {
            continue;
        }
        last_mask_ = mask;
        return g;
    }
    return std::nullopt;
}

std::vector<Graph> enumerate_graphs(NodeId n, bool dedup_isomorphic) {
    GraphEnumerator stream(n, dedup_isomorphic);
    std::vector<Graph> out;
    while (auto g = stream.next()) {
        out.push_back(std::move(*g));
    }
    return out;
}

} // namespace centlab
