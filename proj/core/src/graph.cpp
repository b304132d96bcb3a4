#include "centlab/graph.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace centlab {

namespace {

Edge normalized(NodeId u, NodeId v) { return {std::min(u, v), std::max(u, v)}; }

void check_endpoint(NodeId node, NodeId n) {
    if (node < 0 || node >= n) {
        throw InvalidNode("edge endpoint " + std::to_string(node) + " out of range [0, " +
                          std::to_string(n) + ")");
    }
}

} // namespace

Graph::Graph(NodeId n, const std::vector<Edge> &edges) : n_(n) {
    if (n < 0) {
        throw InvalidNode("negative node count");
    }
    edges_.reserve(edges.size());
    for (const auto &[u, v] : edges) {
        check_endpoint(u, n);
        check_endpoint(v, n);
        if (u == v) {
            throw SelfLoop("self-loop at node " + std::to_string(u));
        }
        edges_.push_back(normalized(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adjacency_.assign(static_cast<std::size_t>(n), {});
    for (const auto &[u, v] : edges_) {
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto &list : adjacency_) {
        std::sort(list.begin(), list.end());
    }
}

Graph Graph::with_edge(NodeId u, NodeId v) const {
    require_node(u);
    require_node(v);
    if (u == v) {
        throw SelfLoop("self-loop at node " + std::to_string(u));
    }
    if (has_edge(u, v)) {
        throw DuplicateEdge("edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "} already present");
    }
    auto edges = edges_;
    edges.push_back(normalized(u, v));
    return Graph(n_, edges);
}

const std::vector<NodeId> &Graph::neighbors(NodeId u) const {
    require_node(u);
    return adjacency_[static_cast<std::size_t>(u)];
}

int Graph::degree(NodeId u) const { return static_cast<int>(neighbors(u).size()); }

bool Graph::has_edge(NodeId u, NodeId v) const {
    require_node(u);
    require_node(v);
    const auto &adj = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(adj.begin(), adj.end(), v);
}

bool Graph::is_complete() const {
    return edge_count() == static_cast<std::size_t>(n_) * (static_cast<std::size_t>(n_) - 1) / 2;
}

void Graph::require_node(NodeId u) const {
    if (u < 0 || u >= n_) {
        throw InvalidNode("node " + std::to_string(u) + " out of range [0, " + std::to_string(n_) +
                          ")");
    }
}

Graph parse_graph(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_n = false;
    NodeId n = 0;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        if (!have_n) {
            if (!(fields >> n)) {
                continue; // blank or comment-only line before the header
            }
            if (n < 0) {
                throw ParseError("negative node count", line_no);
            }
            std::string trailing;
            if (fields >> trailing) {
                throw ParseError("expected a single node count, got extra field '" + trailing + "'",
                                 line_no);
            }
            have_n = true;
            continue;
        }
        NodeId u = 0;
        if (!(fields >> u)) {
            continue;
        }
        NodeId v = 0;
        if (!(fields >> v)) {
            throw ParseError("expected two endpoints", line_no);
        }
        std::string trailing;
        if (fields >> trailing) {
            throw ParseError("unexpected extra field '" + trailing + "'", line_no);
        }
        if (u < 0 || u >= n || v < 0 || v >= n || u == v) {
            throw ParseError("bad edge " + std::to_string(u) + " " + std::to_string(v), line_no);
        }
        edges.emplace_back(u, v);
    }
    if (!have_n) {
        throw ParseError("missing node-count header", line_no);
    }
    return Graph(n, edges);
}

std::string serialize_graph(const Graph &g) {
    std::ostringstream out;
    out << g.node_count() << '\n';
    for (const auto &[u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

Graph graph_from_json(const std::string &json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1);
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") ||
        !doc["n"].is_number_integer() || !doc["edges"].is_array()) {
        throw ParseError("expected {\"n\": int, \"edges\": [[u,v],...]}", 1);
    }
    std::vector<Edge> edges;
    for (const auto &e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer()) {
            throw ParseError("each edge must be a 2-element integer array", 1);
        }
        edges.emplace_back(e[0].get<NodeId>(), e[1].get<NodeId>());
    }
    try {
        return Graph(doc["n"].get<NodeId>(), edges);
    } catch (const Error &e) {
        throw ParseError(e.what(), 1);
    }
}

std::string graph_to_json(const Graph &g) {
    nlohmann::json doc;
    doc["n"] = g.node_count();
    doc["edges"] = nlohmann::json::array();
    for (const auto &[u, v] : g.edges()) {
        doc["edges"].push_back({u, v});
    }
    return doc.dump();
}

} // namespace centlab
