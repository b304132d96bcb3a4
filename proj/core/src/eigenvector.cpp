#include <cmath>
#include <vector>

#include "centlab/measures.hpp"
#include "centlab/traversal.hpp"

namespace centlab {

namespace {

// Components whose eigenvalues agree within this band are treated as tied.
// Exactly tied components (isomorphic blocks) land well inside it; distinct
// small-graph eigenvalues sit far outside it.
constexpr double kTieEpsilon = 1e-9;

struct ComponentEigen {
    double lambda = 0.0;
    std::vector<double> vector; // unit, indexed by block position
};

// Power iteration on (A_block + I) with the all-ones start. The shift makes
// the Perron root strictly dominant in magnitude even on bipartite blocks,
// and the all-ones vector is never orthogonal to the Perron vector.
ComponentEigen component_eigenpair(const std::vector<std::vector<int>> &adj,
                                   const EigenOptions &options) {
    const std::size_t k = adj.size();
    std::vector<double> x(k, 1.0 / std::sqrt(static_cast<double>(k)));
    std::vector<double> y(k, 0.0);

    for (int iteration = 0; iteration < options.max_iterations; ++iteration) {
        for (std::size_t i = 0; i < k; ++i) {
            double sum = x[i]; // identity shift
            for (int j : adj[i]) {
                sum += x[static_cast<std::size_t>(j)];
            }
            y[i] = sum;
        }
        double mu = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            mu += x[i] * y[i];
        }
        double residual_sq = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            const double r = y[i] - mu * x[i];
            residual_sq += r * r;
        }
        if (std::sqrt(residual_sq) <= options.tolerance * std::max(1.0, std::fabs(mu))) {
            return {mu - 1.0, x};
        }
        double norm = 0.0;
        for (double v : y) {
            norm += v * v;
        }
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < k; ++i) {
            x[i] = y[i] / norm;
        }
    }
    throw ConvergenceFailure("power iteration did not converge within " +
                             std::to_string(options.max_iterations) + " iterations");
}

} // namespace

EigenResult eigenvector_centrality(const Graph &g, const EigenOptions &options) {
    if (options.tolerance <= 0.0) {
        throw InvalidParameter("eigenvector tolerance must be positive");
    }
    EigenResult result;
    result.vector.assign(static_cast<std::size_t>(g.node_count()), 0.0);
    if (g.edge_count() == 0) {
        return result; // all-zero vector, lambda_max = 0
    }

    const ComponentPartition parts = connected_components(g);
    std::vector<ComponentEigen> eigens;
    eigens.reserve(parts.blocks.size());
    for (const auto &block : parts.blocks) {
        std::vector<int> local(static_cast<std::size_t>(g.node_count()), -1);
        for (std::size_t i = 0; i < block.size(); ++i) {
            local[static_cast<std::size_t>(block[i])] = static_cast<int>(i);
        }
        std::vector<std::vector<int>> adj(block.size());
        for (std::size_t i = 0; i < block.size(); ++i) {
            for (NodeId w : g.neighbors(block[i])) {
                adj[i].push_back(local[static_cast<std::size_t>(w)]);
            }
        }
        eigens.push_back(component_eigenpair(adj, options));
    }

    double lambda_max = eigens.front().lambda;
    for (const auto &e : eigens) {
        lambda_max = std::max(lambda_max, e.lambda);
    }

    std::vector<std::size_t> tied;
    for (std::size_t b = 0; b < eigens.size(); ++b) {
        if (lambda_max - eigens[b].lambda <= kTieEpsilon) {
            tied.push_back(b);
        }
    }

    result.lambda_max = lambda_max;
    result.component_chosen = static_cast<int>(tied.front()); // blocks are in
                                                              // smallest-node order
    result.degenerate = tied.size() > 1;

    if (tied.size() == 1) {
        const auto &block = parts.blocks[tied.front()];
        const auto &vec = eigens[tied.front()].vector;
        for (std::size_t i = 0; i < block.size(); ++i) {
            result.vector[static_cast<std::size_t>(block[i])] = vec[i];
        }
        return result;
    }

    // Tied maxima: combine the Perron vectors with the weights full-graph
    // power iteration would converge to, <1, x_c>. The weight is intrinsic to
    // each component, so the result does not depend on node labels.
    double norm_sq = 0.0;
    for (std::size_t b : tied) {
        const auto &block = parts.blocks[b];
        const auto &vec = eigens[b].vector;
        double coefficient = 0.0;
        for (double v : vec) {
            coefficient += v;
        }
        for (std::size_t i = 0; i < block.size(); ++i) {
            const double value = coefficient * vec[i];
            result.vector[static_cast<std::size_t>(block[i])] = value;
            norm_sq += value * value;
        }
    }
    const double norm = std::sqrt(norm_sq);
    for (double &v : result.vector) {
        v /= norm;
    }
    return result;
}

} // namespace centlab
