#include "centlab/isomorphism.hpp"

#include <algorithm>

namespace centlab {

std::vector<NodeId> NodeBijection::inverse() const {
    std::vector<NodeId> inv(forward.size(), -1);
    for (std::size_t u = 0; u < forward.size(); ++u) {
        inv[static_cast<std::size_t>(forward[u])] = static_cast<NodeId>(u);
    }
    return inv;
}

Graph apply_permutation(const Graph &g, const NodeBijection &pi) {
    const auto n = static_cast<std::size_t>(g.node_count());
    if (pi.forward.size() != n) {
        throw NotAPermutation("permutation size " + std::to_string(pi.forward.size()) +
                              " does not match node count " + std::to_string(n));
    }
    std::vector<bool> seen(n, false);
    for (NodeId image : pi.forward) {
        if (image < 0 || static_cast<std::size_t>(image) >= n ||
            seen[static_cast<std::size_t>(image)]) {
            throw NotAPermutation("mapping is not a bijection on 0.." + std::to_string(n) + "-1");
        }
        seen[static_cast<std::size_t>(image)] = true;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const auto &[u, v] : g.edges()) {
        edges.emplace_back(pi.forward[static_cast<std::size_t>(u)],
                           pi.forward[static_cast<std::size_t>(v)]);
    }
    return Graph(g.node_count(), edges);
}

namespace {

struct IsoSearch {
    const Graph &g;
    const Graph &h;
    std::vector<NodeId> g_to_h;
    std::vector<bool> h_used;
    std::vector<NodeId> order; // g nodes, high degree first

    bool extend(std::size_t depth) {
        if (depth == order.size()) {
            return true;
        }
        const NodeId u = order[depth];
        for (NodeId cand = 0; cand < h.node_count(); ++cand) {
            if (h_used[static_cast<std::size_t>(cand)] || h.degree(cand) != g.degree(u)) {
                continue;
            }
            bool consistent = true;
            for (std::size_t d = 0; d < depth; ++d) {
                const NodeId prev = order[d];
                if (g.has_edge(u, prev) != h.has_edge(cand, g_to_h[static_cast<std::size_t>(prev)])) {
                    consistent = false;
                    break;
                }
            }
            if (!consistent) {
                continue;
            }
            g_to_h[static_cast<std::size_t>(u)] = cand;
            h_used[static_cast<std::size_t>(cand)] = true;
            if (extend(depth + 1)) {
                return true;
            }
            h_used[static_cast<std::size_t>(cand)] = false;
        }
        return false;
    }
};

} // namespace

std::optional<NodeBijection> find_isomorphism(const Graph &g, const Graph &h) {
    if (g.node_count() != h.node_count() || g.edge_count() != h.edge_count()) {
        return std::nullopt;
    }
    const auto n = static_cast<std::size_t>(g.node_count());

    std::vector<int> deg_g(n), deg_h(n);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        deg_g[static_cast<std::size_t>(v)] = g.degree(v);
        deg_h[static_cast<std::size_t>(v)] = h.degree(v);
    }
    auto sorted_g = deg_g, sorted_h = deg_h;
    std::sort(sorted_g.begin(), sorted_g.end());
    std::sort(sorted_h.begin(), sorted_h.end());
    if (sorted_g != sorted_h) {
        return std::nullopt;
    }

    IsoSearch search{g, h, std::vector<NodeId>(n, -1), std::vector<bool>(n, false), {}};
    search.order.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        search.order[i] = static_cast<NodeId>(i);
    }
    // Constrained nodes first: high degree prunes earlier.
    std::stable_sort(search.order.begin(), search.order.end(), [&](NodeId a, NodeId b) {
        return deg_g[static_cast<std::size_t>(a)] > deg_g[static_cast<std::size_t>(b)];
    });

    if (!search.extend(0)) {
        return std::nullopt;
    }
    return NodeBijection{std::move(search.g_to_h)};
}

} // namespace centlab
