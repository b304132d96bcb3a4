#include "centlab/measures.hpp"

#include <algorithm>

#include "centlab/traversal.hpp"

namespace centlab {

CentralityVector uniform_centrality(const Graph &g, const Rational &beta) {
    if (beta < 0) {
        throw InvalidParameter("uniform centrality requires beta >= 0");
    }
    return CentralityVector("uniform",
                            std::vector<Rational>(static_cast<std::size_t>(g.node_count()), beta));
}

CentralityVector degree_centrality(const Graph &g) {
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(g.node_count()));
    for (NodeId u = 0; u < g.node_count(); ++u) {
        values.emplace_back(g.degree(u));
    }
    return CentralityVector("degree", std::move(values));
}

CentralityVector closeness_centrality(const Graph &g) {
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(g.node_count()));
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const DistanceVector dist = shortest_distances(g, u);
        Rational total = 0;
        for (NodeId w = 0; w < g.node_count(); ++w) {
            if (w != u && dist.reachable(w)) {
                total += Rational(1, dist.at(w));
            }
        }
        values.push_back(std::move(total));
    }
    return CentralityVector("closeness", std::move(values));
}

CentralityVector betweenness_centrality(const Graph &g) {
    const auto n = g.node_count();
    std::vector<PathCountTable> tables;
    tables.reserve(static_cast<std::size_t>(n));
    for (NodeId s = 0; s < n; ++s) {
        tables.push_back(shortest_path_counts(g, s));
    }

    std::vector<Rational> values(static_cast<std::size_t>(n), Rational(0));
    for (NodeId u = 0; u < n; ++u) {
        const auto &from_u = tables[static_cast<std::size_t>(u)];
        Rational total = 0;
        // Unordered pairs {s,t} in u's component, both distinct from u. The
        // s->t shortest paths through u number sigma_s(u) * sigma_u(t) when u
        // sits on a geodesic, i.e. dist(s,u) + dist(u,t) = dist(s,t).
        for (NodeId s = 0; s < n; ++s) {
            if (s == u || !from_u.dist.reachable(s)) {
                continue;
            }
            const auto &from_s = tables[static_cast<std::size_t>(s)];
            for (NodeId t = s + 1; t < n; ++t) {
                if (t == u || !from_s.dist.reachable(t)) {
                    continue;
                }
                if (from_s.dist.at(u) + from_u.dist.at(t) != from_s.dist.at(t)) {
                    continue;
                }
                total += Rational(from_s.sigma[static_cast<std::size_t>(u)] *
                                      from_u.sigma[static_cast<std::size_t>(t)],
                                  from_s.sigma[static_cast<std::size_t>(t)]);
            }
        }
        values[static_cast<std::size_t>(u)] = std::move(total);
    }
    return CentralityVector("betweenness", std::move(values));
}

namespace {

// Walks every shortest path from s down the BFS distance gradient, counting
// interior visits per node.
void enumerate_paths(const Graph &g, const DistanceVector &dist, NodeId current, NodeId s,
                     std::vector<NodeId> &path, std::vector<BigInt> &interior_visits,
                     BigInt &total_paths) {
    if (current == s) {
        ++total_paths;
        // path holds t..s inclusive; interior nodes exclude both endpoints
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            ++interior_visits[static_cast<std::size_t>(path[i])];
        }
        return;
    }
    for (NodeId w : g.neighbors(current)) {
        if (dist.reachable(w) && dist.at(w) == dist.at(current) - 1) {
            path.push_back(w);
            enumerate_paths(g, dist, w, s, path, interior_visits, total_paths);
            path.pop_back();
        }
    }
}

} // namespace

CentralityVector betweenness_oracle(const Graph &g) {
    const auto n = g.node_count();
    if (n > 8) {
        throw BudgetExceeded("betweenness oracle enumerates paths only up to n = 8");
    }
    std::vector<Rational> values(static_cast<std::size_t>(n), Rational(0));
    for (NodeId s = 0; s < n; ++s) {
        const DistanceVector dist = shortest_distances(g, s);
        for (NodeId t = s + 1; t < n; ++t) {
            if (!dist.reachable(t)) {
                continue;
            }
            std::vector<BigInt> interior_visits(static_cast<std::size_t>(n), BigInt(0));
            BigInt total_paths = 0;
            std::vector<NodeId> path = {t};
            enumerate_paths(g, dist, t, s, path, interior_visits, total_paths);
            for (NodeId u = 0; u < n; ++u) {
                if (u != s && u != t && interior_visits[static_cast<std::size_t>(u)] != 0) {
                    values[static_cast<std::size_t>(u)] +=
                        Rational(interior_visits[static_cast<std::size_t>(u)], total_paths);
                }
            }
        }
    }
    return CentralityVector("betweenness", std::move(values));
}

CentralityVector weighted_degree_centrality(const Graph &g) {
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(g.node_count()));
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const DistanceVector dist = shortest_distances(g, u);
        Rational total = 0;
        for (NodeId w = 0; w < g.node_count(); ++w) {
            if (w != u && dist.reachable(w)) {
                total += Rational(g.degree(w), dist.at(w));
            }
        }
        values.push_back(std::move(total));
    }
    return CentralityVector("weighted-degree", std::move(values));
}

CentralityVector decaying_degree_centrality(const Graph &g) {
    const auto n = g.node_count();
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(n));
    const BigInt n_squared = BigInt(n) * n;
    for (NodeId u = 0; u < n; ++u) {
        const DistanceVector dist = shortest_distances(g, u);
        Rational total = 0;
        for (NodeId w = 0; w < n; ++w) {
            if (!dist.reachable(w)) {
                continue;
            }
            BigInt denom = 1;
            for (int h = 0; h < dist.at(w); ++h) {
                denom *= n_squared;
            }
            total += Rational(BigInt(g.degree(w)), denom);
        }
        values.push_back(std::move(total));
    }
    return CentralityVector("decaying-degree", std::move(values));
}

DdcProfile ddc_profile(const Graph &g, NodeId u) {
    const HopPartition hp = hop_partition(g, u);
    DdcProfile profile;
    profile.node = u;
    profile.sums.reserve(hp.layers.size());
    for (const auto &layer : hp.layers) {
        long long sum = 0;
        for (NodeId w : layer) {
            sum += g.degree(w);
        }
        profile.sums.push_back(sum);
    }
    return profile;
}

std::strong_ordering compare_ddc_lex(const DdcProfile &p, const DdcProfile &q) {
    const std::size_t len = std::max(p.sums.size(), q.sums.size());
    for (std::size_t h = 0; h < len; ++h) {
        const long long a = h < p.sums.size() ? p.sums[h] : 0;
        const long long b = h < q.sums.size() ? q.sums[h] : 0;
        if (a != b) {
            return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    return std::strong_ordering::equal;
}

std::vector<MeasureHandle> measure_registry(const Rational &beta,
                                            const EigenOptions &eigen_options) {
    if (beta < 0) {
        throw InvalidParameter("uniform centrality requires beta >= 0");
    }
    std::vector<MeasureHandle> registry;
    registry.push_back({"uniform", "Uniform Centrality", Exactness::exact,
                        [beta](const Graph &g) { return uniform_centrality(g, beta); },
                        "beta=" + rational_to_string(beta)});
    registry.push_back({"degree", "Degree Centrality", Exactness::exact,
                        [](const Graph &g) { return degree_centrality(g); }, ""});
    registry.push_back({"closeness", "Closeness Centrality", Exactness::exact,
                        [](const Graph &g) { return closeness_centrality(g); }, ""});
    registry.push_back({"betweenness", "Betweenness Centrality", Exactness::exact,
                        [](const Graph &g) { return betweenness_centrality(g); }, ""});
    registry.push_back({"weighted-degree", "Weighted Degree Centrality", Exactness::exact,
                        [](const Graph &g) { return weighted_degree_centrality(g); }, ""});
    registry.push_back({"eigenvector", "Eigen Vector Centrality", Exactness::numeric,
                        [eigen_options](const Graph &g) {
                            return CentralityVector(
                                "eigenvector", eigenvector_centrality(g, eigen_options).vector);
                        },
                        "tol=" + std::to_string(eigen_options.tolerance)});
    registry.push_back({"decaying-degree", "Decaying Degree Centrality", Exactness::exact,
                        [](const Graph &g) { return decaying_degree_centrality(g); }, ""});
    return registry;
}

const MeasureHandle &find_measure(const std::vector<MeasureHandle> &registry,
                                  const std::string &name) {
    for (const auto &handle : registry) {
        if (handle.name == name) {
            return handle;
        }
    }
    throw InvalidArguments("unknown measure '" + name + "'");
}

} // namespace centlab
