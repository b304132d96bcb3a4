#include "centlab/axioms.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "centlab/isomorphism.hpp"
#include "centlab/traversal.hpp"
#include "ordered_scan.hpp"

namespace centlab {

int axiom_number(AxiomId a) { return static_cast<int>(a); }

AxiomId axiom_from_number(int number) {
    if (number < 1 || number > 6) {
        throw InvalidArguments("axiom number must be 1..6, got " + std::to_string(number));
    }
    return static_cast<AxiomId>(number);
}

std::string axiom_name(AxiomId a) {
    switch (a) {
    case AxiomId::isomorphic_invariance: return "isomorphic-invariance";
    case AxiomId::locality: return "locality";
    case AxiomId::isolated_minima: return "isolated-minima";
    case AxiomId::edge_monotonicity: return "edge-monotonicity";
    case AxiomId::diminishing_impact: return "diminishing-impact";
    case AxiomId::structural_consistency: return "structural-consistency";
    }
    return "?";
}

namespace {

AxiomVerdict make_verdict(AxiomId axiom, const MeasureHandle &m) {
    AxiomVerdict v;
    v.axiom = axiom;
    v.measure_name = m.name;
    v.numeric = m.exactness == Exactness::numeric;
    return v;
}

Score zero_of(const MeasureHandle &m) {
    return m.exactness == Exactness::exact ? Score::exact(Rational(0)) : Score::numeric(0.0);
}

std::vector<Edge> non_edges(const Graph &g) {
    std::vector<Edge> result;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v = u + 1; v < g.node_count(); ++v) {
            if (!g.has_edge(u, v)) {
                result.emplace_back(u, v);
            }
        }
    }
    return result;
}

} // namespace

AxiomVerdict check_isomorphic_invariance(const MeasureHandle &m, const Graph &g,
                                         const IsomorphismCheckOptions &options) {
    if (options.trials < 1) {
        throw InvalidArguments("isomorphic-invariance check needs trials >= 1");
    }
    AxiomVerdict verdict = make_verdict(AxiomId::isomorphic_invariance, m);
    const CentralityVector base = m.evaluate(g);
    const auto n = static_cast<std::size_t>(g.node_count());

    auto test_permutation = [&](const std::vector<NodeId> &forward) -> bool {
        const NodeBijection pi{forward};
        const Graph permuted = apply_permutation(g, pi);
        const CentralityVector relabeled = m.evaluate(permuted);
        for (NodeId v = 0; v < g.node_count(); ++v) {
            const Score before = base.at(v);
            const Score after = relabeled.at(forward[static_cast<std::size_t>(v)]);
            if (!scores_equal(before, after)) {
                Witness w;
                w.graph = g;
                w.second_graph = permuted;
                w.permutation = forward;
                w.nodes = {{"v", v}, {"pi(v)", forward[static_cast<std::size_t>(v)]}};
                w.values = {{"F_v(G)", before}, {"F_pi(v)(H)", after}};
                w.description = "score of node " + std::to_string(v) + " changes under relabeling";
                verdict.status = CheckStatus::violated;
                verdict.witness = std::move(w);
                return false;
            }
        }
        return true;
    };

    std::vector<NodeId> identity(n);
    std::iota(identity.begin(), identity.end(), 0);

    if (options.exhaustive && g.node_count() <= 7) {
        std::vector<NodeId> forward = identity;
        do {
            if (!test_permutation(forward)) {
                return verdict;
            }
        } while (std::next_permutation(forward.begin(), forward.end()));
        return verdict;
    }

    if (!test_permutation(identity)) {
        return verdict;
    }
    std::vector<NodeId> reversal(n);
    for (std::size_t i = 0; i < n; ++i) {
        reversal[i] = static_cast<NodeId>(n - 1 - i);
    }
    if (!test_permutation(reversal)) {
        return verdict;
    }

    std::mt19937_64 rng(options.seed);
    for (int trial = 0; trial < options.trials; ++trial) {
        std::vector<NodeId> forward = identity;
        for (std::size_t i = n; i > 1; --i) { // Fisher-Yates, rng-stable across platforms
            std::swap(forward[i - 1], forward[rng() % i]);
        }
        if (!test_permutation(forward)) {
            return verdict;
        }
    }
    return verdict;
}

AxiomVerdict check_locality(const MeasureHandle &m, const Graph &g) {
    AxiomVerdict verdict = make_verdict(AxiomId::locality, m);
    const CentralityVector base = m.evaluate(g);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const InducedComponent sub = induced_component(g, v);
        const CentralityVector local = m.evaluate(sub.graph);
        const Score whole = base.at(v);
        const Score component = local.at(sub.to_sub[static_cast<std::size_t>(v)]);
        if (!scores_equal(whole, component)) {
            Witness w;
            w.graph = g;
            w.second_graph = sub.graph;
            w.nodes = {{"v", v}, {"v_in_component", sub.to_sub[static_cast<std::size_t>(v)]}};
            w.values = {{"F_v(G)", whole}, {"F_v(G[K_v])", component}};
            w.description = "score of node " + std::to_string(v) +
                            " differs on its induced component";
            verdict.status = CheckStatus::violated;
            verdict.witness = std::move(w);
            return verdict;
        }
    }
    return verdict;
}

AxiomVerdict check_isolated_minima(const MeasureHandle &m, const Graph &g) {
    AxiomVerdict verdict = make_verdict(AxiomId::isolated_minima, m);
    verdict.vacuous = true;
    const CentralityVector base = m.evaluate(g);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.degree(v) != 0) {
            continue;
        }
        verdict.vacuous = false;
        const Score value = base.at(v);
        if (!scores_equal(value, zero_of(m))) {
            Witness w;
            w.graph = g;
            w.nodes = {{"v", v}};
            w.values = {{"F_v(G)", value}};
            w.description = "isolated node " + std::to_string(v) + " has non-zero score";
            verdict.status = CheckStatus::violated;
            verdict.witness = std::move(w);
            return verdict;
        }
    }
    return verdict;
}

AxiomVerdict check_edge_monotonicity(const MeasureHandle &m, const Graph &g) {
    AxiomVerdict verdict = make_verdict(AxiomId::edge_monotonicity, m);
    const auto candidates = non_edges(g);
    verdict.vacuous = candidates.empty();
    if (verdict.vacuous) {
        return verdict;
    }
    const CentralityVector before = m.evaluate(g);
    for (const auto &[u, v] : candidates) {
        const CentralityVector after = m.evaluate(g.with_edge(u, v));
        const bool u_up = strictly_greater(after.at(u), before.at(u));
        const bool v_up = strictly_greater(after.at(v), before.at(v));
        if (!u_up || !v_up) {
            Witness w;
            w.graph = g;
            w.added_edge = {{u, v}};
            w.nodes = {{"u", u}, {"v", v}};
            w.values = {{"F_u(G)", before.at(u)},
                        {"F_u(G')", after.at(u)},
                        {"F_v(G)", before.at(v)},
                        {"F_v(G')", after.at(v)}};
            w.description = std::string("adding {") + std::to_string(u) + "," + std::to_string(v) +
                            "} does not strictly raise " + (u_up ? "v" : "u");
            verdict.status = CheckStatus::violated;
            verdict.witness = std::move(w);
            return verdict;
        }
    }
    return verdict;
}

AxiomVerdict check_diminishing_impact(const MeasureHandle &m, const Graph &g,
                                      const DiminishingImpactOptions &options) {
    AxiomVerdict verdict = make_verdict(AxiomId::diminishing_impact, m);
    verdict.vacuous = true;
    const CentralityVector before = m.evaluate(g);

    for (const auto &[u, v] : non_edges(g)) {
        // Layers are indexed on the graph BEFORE the edge is added; layer 0
        // is {u,v} itself. Nodes unreachable from both anchors are exempt.
        const HopPartition hops = hop_partition(g, u, v);
        std::vector<int> populated;
        for (std::size_t h = 0; h < hops.layers.size(); ++h) {
            if (!hops.layers[h].empty()) {
                populated.push_back(static_cast<int>(h));
            }
        }
        if (populated.size() < 2) {
            continue;
        }
        verdict.vacuous = false;

        const CentralityVector after = m.evaluate(g.with_edge(u, v));
        std::vector<Score> delta;
        delta.reserve(static_cast<std::size_t>(g.node_count()));
        for (NodeId z = 0; z < g.node_count(); ++z) {
            delta.push_back(abs_difference(after.at(z), before.at(z)));
        }

        auto report = [&](int h_near, NodeId z_near, int h_far, NodeId z_far) {
            Witness w;
            w.graph = g;
            w.added_edge = {{u, v}};
            w.nodes = {{"u", u}, {"v", v}, {"z_h", z_near}, {"z_hbar", z_far}};
            w.values = {{"|delta(z_h)|", delta[static_cast<std::size_t>(z_near)]},
                        {"|delta(z_hbar)|", delta[static_cast<std::size_t>(z_far)]}};
            w.description = "adding {" + std::to_string(u) + "," + std::to_string(v) +
                            "}: change at hop " + std::to_string(h_near) +
                            " fails to exceed change at hop " + std::to_string(h_far);
            verdict.status = CheckStatus::violated;
            verdict.witness = std::move(w);
        };

        for (std::size_t a = 0; a < populated.size(); ++a) {
            for (std::size_t b = a + 1; b < populated.size(); ++b) {
                const auto &near_layer = hops.layers[static_cast<std::size_t>(populated[a])];
                const auto &far_layer = hops.layers[static_cast<std::size_t>(populated[b])];
                if (options.existential) {
                    // Weaker reading: some near node must beat some far node.
                    NodeId best_near = near_layer.front();
                    NodeId best_far = far_layer.front();
                    for (NodeId z : near_layer) {
                        if (strictly_greater(delta[static_cast<std::size_t>(z)],
                                             delta[static_cast<std::size_t>(best_near)])) {
                            best_near = z;
                        }
                    }
                    for (NodeId z : far_layer) {
                        if (strictly_greater(delta[static_cast<std::size_t>(best_far)],
                                             delta[static_cast<std::size_t>(z)])) {
                            best_far = z;
                        }
                    }
                    if (!strictly_greater(delta[static_cast<std::size_t>(best_near)],
                                          delta[static_cast<std::size_t>(best_far)])) {
                        report(populated[a], best_near, populated[b], best_far);
                        return verdict;
                    }
                } else {
                    for (NodeId z_near : near_layer) {
                        for (NodeId z_far : far_layer) {
                            if (!strictly_greater(delta[static_cast<std::size_t>(z_near)],
                                                  delta[static_cast<std::size_t>(z_far)])) {
                                report(populated[a], z_near, populated[b], z_far);
                                return verdict;
                            }
                        }
                    }
                }
            }
        }
    }
    return verdict;
}

bool dominating_injection_exists(std::vector<Score> a, std::vector<Score> b) {
    if (a.size() < b.size()) {
        throw InvalidArguments("dominating injection needs |a| >= |b|");
    }
    if (b.empty()) {
        return false; // a non-empty matching is required
    }
    auto descending = [](const Score &x, const Score &y) {
        return x.is_exact() ? x.rational() > y.rational() : x.as_double() > y.as_double();
    };
    std::sort(a.begin(), a.end(), descending);
    std::sort(b.begin(), b.end(), descending);
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (!strictly_greater(a[i], b[i])) {
            return false;
        }
    }
    return true;
}

AxiomVerdict check_structural_consistency(const MeasureHandle &m, const Graph &g) {
    AxiomVerdict verdict = make_verdict(AxiomId::structural_consistency, m);
    verdict.vacuous = true;
    const CentralityVector base = m.evaluate(g);

    auto neighbor_values = [&](NodeId x) {
        std::vector<Score> values;
        values.reserve(g.neighbors(x).size());
        for (NodeId w : g.neighbors(x)) {
            values.push_back(base.at(w));
        }
        return values;
    };

    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (u == v || g.degree(u) < g.degree(v) || g.degree(v) == 0) {
                continue;
            }
            if (!dominating_injection_exists(neighbor_values(u), neighbor_values(v))) {
                continue;
            }
            verdict.vacuous = false;
            if (!strictly_greater(base.at(u), base.at(v))) {
                Witness w;
                w.graph = g;
                w.nodes = {{"u", u}, {"v", v}};
                w.values = {{"F_u(G)", base.at(u)}, {"F_v(G)", base.at(v)}};
                w.description = "neighbors of " + std::to_string(u) +
                                " strictly dominate neighbors of " + std::to_string(v) +
                                " but its score is not higher";
                verdict.status = CheckStatus::violated;
                verdict.witness = std::move(w);
                return verdict;
            }
        }
    }
    return verdict;
}

AxiomVerdict check_axiom(AxiomId axiom, const MeasureHandle &m, const Graph &g,
                         const CheckOptions &options) {
    switch (axiom) {
    case AxiomId::isomorphic_invariance:
        return check_isomorphic_invariance(m, g, options.isomorphism);
    case AxiomId::locality: return check_locality(m, g);
    case AxiomId::isolated_minima: return check_isolated_minima(m, g);
    case AxiomId::edge_monotonicity: return check_edge_monotonicity(m, g);
    case AxiomId::diminishing_impact: return check_diminishing_impact(m, g, options.diminishing);
    case AxiomId::structural_consistency: return check_structural_consistency(m, g);
    }
    throw InvalidArguments("unknown axiom");
}

std::array<AxiomAggregate, 6> run_axiom_suite(const MeasureHandle &m,
                                              const std::vector<Graph> &graphs,
                                              const SuiteConfig &config) {
    std::array<AxiomAggregate, 6> aggregates;
    for (std::size_t i = 0; i < kAllAxioms.size(); ++i) {
        const AxiomId axiom = kAllAxioms[i];
        auto outcome = detail::ordered_scan(
            graphs.size(), config.jobs, config.short_circuit,
            [&](std::uint64_t index) -> std::optional<AxiomVerdict> {
                return check_axiom(axiom, m, graphs[static_cast<std::size_t>(index)],
                                   config.check);
            });
        AxiomAggregate &agg = aggregates[i];
        agg.axiom = axiom;
        agg.numeric = m.exactness == Exactness::numeric;
        agg.graphs_checked = outcome.checked;
        agg.vacuous_count = outcome.vacuous;
        if (outcome.violation_index) {
            agg.status = CheckStatus::violated;
            agg.first_witness = std::move(outcome.witness);
            agg.first_witness_index = *outcome.violation_index;
        }
    }
    return aggregates;
}

namespace {

NodeId witness_node(const Witness &w, const std::string &role) {
    for (const auto &[name, node] : w.nodes) {
        if (name == role) {
            return node;
        }
    }
    throw InvalidArguments("witness is missing role '" + role + "'");
}

const Score &witness_value(const Witness &w, const std::string &label) {
    for (const auto &[name, value] : w.values) {
        if (name == label) {
            return value;
        }
    }
    throw InvalidArguments("witness is missing value '" + label + "'");
}

bool value_matches(const Score &stored, const Score &recomputed) {
    return scores_equal(stored, recomputed);
}

} // namespace

bool replay_witness(const MeasureHandle &m, AxiomId axiom, const Witness &w) {
    try {
        switch (axiom) {
        case AxiomId::isomorphic_invariance: {
            if (!w.permutation || !w.second_graph) {
                return false;
            }
            const CentralityVector base = m.evaluate(w.graph);
            const CentralityVector relabeled = m.evaluate(*w.second_graph);
            const NodeId v = witness_node(w, "v");
            const NodeId pv = (*w.permutation)[static_cast<std::size_t>(v)];
            const Score before = base.at(v);
            const Score after = relabeled.at(pv);
            return value_matches(witness_value(w, "F_v(G)"), before) &&
                   value_matches(witness_value(w, "F_pi(v)(H)"), after) &&
                   !scores_equal(before, after);
        }
        case AxiomId::locality: {
            const NodeId v = witness_node(w, "v");
            const CentralityVector base = m.evaluate(w.graph);
            const InducedComponent sub = induced_component(w.graph, v);
            const CentralityVector local = m.evaluate(sub.graph);
            const Score whole = base.at(v);
            const Score component = local.at(sub.to_sub[static_cast<std::size_t>(v)]);
            return value_matches(witness_value(w, "F_v(G)"), whole) &&
                   value_matches(witness_value(w, "F_v(G[K_v])"), component) &&
                   !scores_equal(whole, component);
        }
        case AxiomId::isolated_minima: {
            const NodeId v = witness_node(w, "v");
            if (w.graph.degree(v) != 0) {
                return false;
            }
            const Score value = m.evaluate(w.graph).at(v);
            const Score zero = value.is_exact() ? Score::exact(Rational(0)) : Score::numeric(0.0);
            return value_matches(witness_value(w, "F_v(G)"), value) && !scores_equal(value, zero);
        }
        case AxiomId::edge_monotonicity: {
            if (!w.added_edge) {
                return false;
            }
            const auto [u, v] = *w.added_edge;
            const CentralityVector before = m.evaluate(w.graph);
            const CentralityVector after = m.evaluate(w.graph.with_edge(u, v));
            const bool fails = !strictly_greater(after.at(u), before.at(u)) ||
                               !strictly_greater(after.at(v), before.at(v));
            return value_matches(witness_value(w, "F_u(G)"), before.at(u)) &&
                   value_matches(witness_value(w, "F_u(G')"), after.at(u)) &&
                   value_matches(witness_value(w, "F_v(G)"), before.at(v)) &&
                   value_matches(witness_value(w, "F_v(G')"), after.at(v)) && fails;
        }
        case AxiomId::diminishing_impact: {
            if (!w.added_edge) {
                return false;
            }
            const auto [u, v] = *w.added_edge;
            const NodeId z_near = witness_node(w, "z_h");
            const NodeId z_far = witness_node(w, "z_hbar");
            const CentralityVector before = m.evaluate(w.graph);
            const CentralityVector after = m.evaluate(w.graph.with_edge(u, v));
            const Score d_near = abs_difference(after.at(z_near), before.at(z_near));
            const Score d_far = abs_difference(after.at(z_far), before.at(z_far));
            return value_matches(witness_value(w, "|delta(z_h)|"), d_near) &&
                   value_matches(witness_value(w, "|delta(z_hbar)|"), d_far) &&
                   !strictly_greater(d_near, d_far);
        }
        case AxiomId::structural_consistency: {
            const NodeId u = witness_node(w, "u");
            const NodeId v = witness_node(w, "v");
            const CentralityVector base = m.evaluate(w.graph);
            std::vector<Score> a, b;
            for (NodeId x : w.graph.neighbors(u)) {
                a.push_back(base.at(x));
            }
            for (NodeId x : w.graph.neighbors(v)) {
                b.push_back(base.at(x));
            }
            return value_matches(witness_value(w, "F_u(G)"), base.at(u)) &&
                   value_matches(witness_value(w, "F_v(G)"), base.at(v)) &&
                   dominating_injection_exists(a, b) && !strictly_greater(base.at(u), base.at(v));
        }
        }
    } catch (const Error &) {
        return false;
    }
    return false;
}

} // namespace centlab
