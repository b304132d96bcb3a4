#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "centlab/graph.hpp"
#include "centlab/rational.hpp"
#include "centlab/score.hpp"

namespace centlab {

/// Every node scores the same fixed beta. Throws InvalidParameter if beta < 0.
CentralityVector uniform_centrality(const Graph &g, const Rational &beta);

CentralityVector degree_centrality(const Graph &g);

/// Harmonic closeness: sum of 1/dist(u,w) over reachable w != u.
/// Unreachable nodes contribute zero.
CentralityVector closeness_centrality(const Graph &g);

/// Shortest-path betweenness over unordered pairs {s,t} of the component of
/// u, s,t != u, via exact path-count products.
CentralityVector betweenness_centrality(const Graph &g);

/// Independent betweenness oracle: explicitly enumerates every shortest path
/// per pair by DFS and counts interior visits. Same contract as
/// betweenness_centrality. Throws BudgetExceeded for n > 8.
CentralityVector betweenness_oracle(const Graph &g);

/// Sum of degree(w)/dist(u,w) over reachable w != u.
CentralityVector weighted_degree_centrality(const Graph &g);

/// Sum of degree(w)/n^(2*dist(u,w)) over reachable w, including w == u.
/// n is the global node count, which is what breaks locality.
CentralityVector decaying_degree_centrality(const Graph &g);

struct EigenOptions {
    double tolerance = 1e-12;
    int max_iterations = 100000;
};

/**
 * Dominant eigenpair of the adjacency matrix.
 *
 * Computed per connected component by power iteration on (A + I) with the
 * all-ones start vector (the shift makes the Perron root of each component
 * strictly dominant, bipartite or not). The reported vector is supported on
 * the component(s) attaining the maximal eigenvalue and is zero elsewhere,
 * 2-norm 1. When several components tie for the maximum, the vector combines
 * their Perron vectors with the weights full-graph power iteration converges
 * to, which keeps the measure invariant under relabeling; `degenerate` is set
 * and `component_chosen` reports the tied block with the smallest node index.
 * An edgeless graph yields the all-zero vector with lambda_max = 0.
 *
 * Throws ConvergenceFailure when the iteration cap is hit.
 */
struct EigenResult {
    double lambda_max = 0.0;
    std::vector<double> vector;
    int component_chosen = 0;
    bool degenerate = false;
};

EigenResult eigenvector_centrality(const Graph &g, const EigenOptions &options = {});

/// Hop-wise degree sums around a node: sums[h] = total degree over H^h(node).
/// Trailing entries stop at the last non-empty layer.
struct DdcProfile {
    NodeId node = 0;
    std::vector<long long> sums;
};

DdcProfile ddc_profile(const Graph &g, NodeId u);

/// Lexicographic comparison of hop profiles (padded with zeros). Orders nodes
/// exactly as decaying degree centrality does within one graph.
std::strong_ordering compare_ddc_lex(const DdcProfile &p, const DdcProfile &q);

/// A named, uniformly invocable measure.
struct MeasureHandle {
    std::string name;         // registry key, e.g. "betweenness"
    std::string display_name; // e.g. "Betweenness Centrality"
    Exactness exactness = Exactness::exact;
    std::function<CentralityVector(const Graph &)> evaluate;
    std::string parameters; // human-readable, e.g. "beta=1"
};

/// The seven measures in fixed row order: uniform, degree, closeness,
/// betweenness, weighted-degree, eigenvector, decaying-degree.
std::vector<MeasureHandle> measure_registry(const Rational &beta = Rational(1),
                                            const EigenOptions &eigen_options = {});

/// Lookup by registry name; throws InvalidArguments for unknown names.
const MeasureHandle &find_measure(const std::vector<MeasureHandle> &registry,
                                  const std::string &name);

} // namespace centlab
