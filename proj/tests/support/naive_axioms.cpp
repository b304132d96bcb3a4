#include "naive_axioms.hpp"

#include <algorithm>
#include <numeric>

#include "centlab/isomorphism.hpp"
#include "centlab/traversal.hpp"

namespace centlab::testing {

namespace {

NaiveVerdict naive_isomorphic_invariance(const MeasureHandle &m, const Graph &g) {
    const CentralityVector base = m.evaluate(g);
    std::vector<NodeId> forward(static_cast<std::size_t>(g.node_count()));
    std::iota(forward.begin(), forward.end(), 0);
    do {
        const CentralityVector relabeled = m.evaluate(apply_permutation(g, NodeBijection{forward}));
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (!scores_equal(base.at(v), relabeled.at(forward[static_cast<std::size_t>(v)]))) {
                return {CheckStatus::violated, false};
            }
        }
    } while (std::next_permutation(forward.begin(), forward.end()));
    return {CheckStatus::satisfied, false};
}

NaiveVerdict naive_locality(const MeasureHandle &m, const Graph &g) {
    const CentralityVector base = m.evaluate(g);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const InducedComponent sub = induced_component(g, v);
        const CentralityVector local = m.evaluate(sub.graph);
        if (!scores_equal(base.at(v), local.at(sub.to_sub[static_cast<std::size_t>(v)]))) {
            return {CheckStatus::violated, false};
        }
    }
    return {CheckStatus::satisfied, false};
}

NaiveVerdict naive_isolated_minima(const MeasureHandle &m, const Graph &g) {
    const CentralityVector base = m.evaluate(g);
    const Score zero =
        m.exactness == Exactness::exact ? Score::exact(Rational(0)) : Score::numeric(0.0);
    bool vacuous = true;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.degree(v) == 0) {
            vacuous = false;
            if (!scores_equal(base.at(v), zero)) {
                return {CheckStatus::violated, false};
            }
        }
    }
    return {CheckStatus::satisfied, vacuous};
}

NaiveVerdict naive_edge_monotonicity(const MeasureHandle &m, const Graph &g) {
    const CentralityVector before = m.evaluate(g);
    bool vacuous = true;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v = u + 1; v < g.node_count(); ++v) {
            if (g.has_edge(u, v)) {
                continue;
            }
            vacuous = false;
            const CentralityVector after = m.evaluate(g.with_edge(u, v));
            if (!strictly_greater(after.at(u), before.at(u)) ||
                !strictly_greater(after.at(v), before.at(v))) {
                return {CheckStatus::violated, false};
            }
        }
    }
    return {CheckStatus::satisfied, vacuous};
}

NaiveVerdict naive_diminishing_impact(const MeasureHandle &m, const Graph &g) {
    const CentralityVector before = m.evaluate(g);
    bool vacuous = true;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v = u + 1; v < g.node_count(); ++v) {
            if (g.has_edge(u, v)) {
                continue;
            }
            const DistanceVector du = shortest_distances(g, u);
            const DistanceVector dv = shortest_distances(g, v);
            auto min_dist = [&](NodeId z) -> std::optional<int> {
                if (du.reachable(z) && dv.reachable(z)) {
                    return std::min(du.at(z), dv.at(z));
                }
                if (du.reachable(z)) {
                    return du.at(z);
                }
                if (dv.reachable(z)) {
                    return dv.at(z);
                }
                return std::nullopt;
            };

            bool has_pair = false;
            for (NodeId a = 0; a < g.node_count() && !has_pair; ++a) {
                for (NodeId b = 0; b < g.node_count(); ++b) {
                    const auto ha = min_dist(a);
                    const auto hb = min_dist(b);
                    if (ha && hb && *ha != *hb) {
                        has_pair = true;
                        break;
                    }
                }
            }
            if (!has_pair) {
                continue;
            }
            vacuous = false;

            const CentralityVector after = m.evaluate(g.with_edge(u, v));
            for (NodeId z_near = 0; z_near < g.node_count(); ++z_near) {
                for (NodeId z_far = 0; z_far < g.node_count(); ++z_far) {
                    const auto h_near = min_dist(z_near);
                    const auto h_far = min_dist(z_far);
                    if (!h_near || !h_far || *h_near >= *h_far) {
                        continue;
                    }
                    const Score delta_near = abs_difference(after.at(z_near), before.at(z_near));
                    const Score delta_far = abs_difference(after.at(z_far), before.at(z_far));
                    if (!strictly_greater(delta_near, delta_far)) {
                        return {CheckStatus::violated, false};
                    }
                }
            }
        }
    }
    return {CheckStatus::satisfied, vacuous};
}

bool injection_search(const std::vector<Score> &a, const std::vector<Score> &b, std::size_t next,
                      std::vector<bool> &used) {
    if (next == b.size()) {
        return true;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!used[i] && strictly_greater(a[i], b[next])) {
            used[i] = true;
            if (injection_search(a, b, next + 1, used)) {
                return true;
            }
            used[i] = false;
        }
    }
    return false;
}

NaiveVerdict naive_structural_consistency(const MeasureHandle &m, const Graph &g) {
    const CentralityVector base = m.evaluate(g);
    bool vacuous = true;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (u == v || g.degree(u) < g.degree(v) || g.degree(v) == 0) {
                continue;
            }
            std::vector<Score> a, b;
            for (NodeId w : g.neighbors(u)) {
                a.push_back(base.at(w));
            }
            for (NodeId w : g.neighbors(v)) {
                b.push_back(base.at(w));
            }
            if (!bruteforce_dominating_injection(a, b)) {
                continue;
            }
            vacuous = false;
            if (!strictly_greater(base.at(u), base.at(v))) {
                return {CheckStatus::violated, false};
            }
        }
    }
    return {CheckStatus::satisfied, vacuous};
}

} // namespace

bool bruteforce_dominating_injection(const std::vector<Score> &a, const std::vector<Score> &b) {
    if (b.empty() || a.size() < b.size()) {
        return false;
    }
    std::vector<bool> used(a.size(), false);
    return injection_search(a, b, 0, used);
}

NaiveVerdict naive_check(AxiomId axiom, const MeasureHandle &m, const Graph &g) {
    switch (axiom) {
    case AxiomId::isomorphic_invariance: return naive_isomorphic_invariance(m, g);
    case AxiomId::locality: return naive_locality(m, g);
    case AxiomId::isolated_minima: return naive_isolated_minima(m, g);
    case AxiomId::edge_monotonicity: return naive_edge_monotonicity(m, g);
    case AxiomId::diminishing_impact: return naive_diminishing_impact(m, g);
    case AxiomId::structural_consistency: return naive_structural_consistency(m, g);
    }
    throw InvalidArguments("unknown axiom");
}

} // namespace centlab::testing
