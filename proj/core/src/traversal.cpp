#include "centlab/traversal.hpp"

#include <algorithm>
#include <queue>

namespace centlab {

DistanceVector shortest_distances(const Graph &g, NodeId source) {
    g.require_node(source);
    DistanceVector result;
    result.source = source;
    result.dist.assign(static_cast<std::size_t>(g.node_count()), std::nullopt);
    result.dist[static_cast<std::size_t>(source)] = 0;

    std::queue<NodeId> queue;
    queue.push(source);
    while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop();
        const int next = *result.dist[static_cast<std::size_t>(u)] + 1;
        for (NodeId v : g.neighbors(u)) {
            if (!result.dist[static_cast<std::size_t>(v)]) {
                result.dist[static_cast<std::size_t>(v)] = next;
                queue.push(v);
            }
        }
    }
    return result;
}

ComponentPartition connected_components(const Graph &g) {
    ComponentPartition parts;
    parts.component_of.assign(static_cast<std::size_t>(g.node_count()), -1);
    for (NodeId s = 0; s < g.node_count(); ++s) {
        if (parts.component_of[static_cast<std::size_t>(s)] != -1) {
            continue;
        }
        const int block = static_cast<int>(parts.blocks.size());
        std::vector<NodeId> members;
        std::vector<NodeId> stack = {s};
        parts.component_of[static_cast<std::size_t>(s)] = block;
        while (!stack.empty()) {
            const NodeId u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (NodeId v : g.neighbors(u)) {
                if (parts.component_of[static_cast<std::size_t>(v)] == -1) {
                    parts.component_of[static_cast<std::size_t>(v)] = block;
                    stack.push_back(v);
                }
            }
        }
        std::sort(members.begin(), members.end());
        parts.blocks.push_back(std::move(members));
    }
    return parts;
}

InducedComponent induced_component(const Graph &g, NodeId u) {
    g.require_node(u);
    const DistanceVector dist = shortest_distances(g, u);

    InducedComponent result;
    result.to_sub.assign(static_cast<std::size_t>(g.node_count()), -1);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (dist.reachable(v)) {
            result.to_sub[static_cast<std::size_t>(v)] =
                static_cast<NodeId>(result.to_parent.size());
            result.to_parent.push_back(v);
        }
    }
    std::vector<Edge> edges;
    for (const auto &[a, b] : g.edges()) {
        const NodeId sa = result.to_sub[static_cast<std::size_t>(a)];
        const NodeId sb = result.to_sub[static_cast<std::size_t>(b)];
        if (sa != -1 && sb != -1) {
            edges.emplace_back(sa, sb);
        }
    }
    result.graph = Graph(static_cast<NodeId>(result.to_parent.size()), edges);
    return result;
}

namespace {

HopPartition layers_from_distances(const Graph &g,
                                   std::variant<NodeId, std::pair<NodeId, NodeId>> anchor,
                                   const std::vector<std::optional<int>> &dist) {
    HopPartition hp;
    hp.anchor = anchor;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto &d = dist[static_cast<std::size_t>(v)];
        if (!d) {
            hp.unreachable.push_back(v);
            continue;
        }
        if (static_cast<std::size_t>(*d) >= hp.layers.size()) {
            hp.layers.resize(static_cast<std::size_t>(*d) + 1);
        }
        hp.layers[static_cast<std::size_t>(*d)].push_back(v);
    }
    return hp;
}

} // namespace

HopPartition hop_partition(const Graph &g, NodeId u) {
    return layers_from_distances(g, u, shortest_distances(g, u).dist);
}

HopPartition hop_partition(const Graph &g, NodeId u, NodeId v) {
    g.require_node(u);
    g.require_node(v);
    if (u == v) {
        throw InvalidArguments("pair anchor requires two distinct nodes");
    }
    const DistanceVector du = shortest_distances(g, u);
    const DistanceVector dv = shortest_distances(g, v);
    std::vector<std::optional<int>> combined(static_cast<std::size_t>(g.node_count()));
    for (NodeId z = 0; z < g.node_count(); ++z) {
        const auto &a = du.dist[static_cast<std::size_t>(z)];
        const auto &b = dv.dist[static_cast<std::size_t>(z)];
        if (a && b) {
            combined[static_cast<std::size_t>(z)] = std::min(*a, *b);
        } else if (a) {
            combined[static_cast<std::size_t>(z)] = *a;
        } else if (b) {
            combined[static_cast<std::size_t>(z)] = *b;
        }
    }
    return layers_from_distances(g, std::make_pair(u, v), combined);
}

PathCountTable shortest_path_counts(const Graph &g, NodeId source) {
    PathCountTable table;
    table.source = source;
    table.dist = shortest_distances(g, source);
    table.sigma.assign(static_cast<std::size_t>(g.node_count()), BigInt(0));
    table.sigma[static_cast<std::size_t>(source)] = 1;

    // Process nodes in distance order; the sigma recurrence only looks one
    // BFS level back.
    std::vector<NodeId> order;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (table.dist.reachable(v)) {
            order.push_back(v);
        }
    }
    std::sort(order.begin(), order.end(),
              [&](NodeId a, NodeId b) { return table.dist.at(a) < table.dist.at(b); });
    for (NodeId v : order) {
        if (v == source) {
            continue;
        }
        BigInt total = 0;
        for (NodeId w : g.neighbors(v)) {
            if (table.dist.reachable(w) && table.dist.at(w) == table.dist.at(v) - 1) {
                total += table.sigma[static_cast<std::size_t>(w)];
            }
        }
        table.sigma[static_cast<std::size_t>(v)] = total;
    }
    return table;
}

} // namespace centlab
