#include "centlab/fixtures.hpp"

#include <cmath>
#include <sstream>

#include "centlab/measures.hpp"

namespace centlab {

NodeId Fixture::node_of(const std::string &label) const {
    for (const auto &[name, node] : labels) {
        if (name == label) {
            return node;
        }
    }
    throw InvalidArguments("fixture '" + id + "' has no node labeled '" + label + "'");
}

namespace {

constexpr double kFigureTolerance = 1e-3; // figures quote floats to 4 decimals

std::vector<Fixture> build_catalog() {
    std::vector<Fixture> catalog;

    {
        Fixture f;
        f.id = "table1-star";
        f.description = "5-node star worked example; the center dominates every measure";
        f.graph = Graph(5, {{2, 0}, {2, 1}, {2, 3}, {2, 4}});
        f.labels = {{"center", 2}, {"leaf1", 0}, {"leaf2", 1}, {"leaf3", 3}, {"leaf4", 4}};
        f.values = {
            {"degree", "center", FixtureValueKind::pre, "4", 0},
            {"degree", "leaf1", FixtureValueKind::pre, "1", 0},
            {"closeness", "center", FixtureValueKind::pre, "4", 0},
            {"closeness", "leaf1", FixtureValueKind::pre, "5/2", 0},
            {"betweenness", "center", FixtureValueKind::pre, "6", 0},
            {"betweenness", "leaf1", FixtureValueKind::pre, "0", 0},
            {"eigenvector", "center", FixtureValueKind::pre, "0.70710678", 1e-6},
            {"eigenvector", "leaf1", FixtureValueKind::pre, "0.35355339", 1e-6},
            {"eigenvector", "", FixtureValueKind::lambda_pre, "2", 1e-9},
        };
        catalog.push_back(std::move(f));
    }
    {
        Fixture f;
        f.id = "dc-structural";
        f.description = "two trees with equal-degree roots; the richer neighborhood wins nothing";
        f.graph = Graph(8, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {5, 6}, {5, 7}});
        f.labels = {{"u", 0},  {"u1", 1}, {"u2", 2}, {"u11", 3},
                    {"u21", 4}, {"v", 5},  {"v1", 6}, {"v2", 7}};
        f.expected = {{"degree", AxiomId::structural_consistency, CheckStatus::violated}};
        f.values = {
            {"degree", "u", FixtureValueKind::pre, "2", 0},
            {"degree", "v", FixtureValueKind::pre, "2", 0},
            {"degree", "u1", FixtureValueKind::pre, "2", 0},
            {"degree", "v1", FixtureValueKind::pre, "1", 0},
        };
        catalog.push_back(std::move(f));
    }
    {
        Fixture f;
        f.id = "cc-diminishing";
        f.description = "7-node path; a chord changes a 2-hop node more than a 1-hop node";
        f.graph = Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
        f.added_edge = {{2, 6}};
        f.labels = {{"z2", 0}, {"y", 1}, {"u", 2}, {"z1", 3}, {"w", 4}, {"x", 5}, {"v", 6}};
        f.expected = {
            {"closeness", AxiomId::diminishing_impact, CheckStatus::violated},
            {"betweenness", AxiomId::diminishing_impact, CheckStatus::violated},
        };
        f.values = {
            {"closeness", "z1", FixtureValueKind::abs_delta, "1/6", 0},
            {"closeness", "z2", FixtureValueKind::abs_delta, "13/60", 0},
            {"betweenness", "w", FixtureValueKind::pre, "8", 0},
            {"betweenness", "w", FixtureValueKind::post, "1", 0},
            {"betweenness", "y", FixtureValueKind::pre, "5", 0},
            {"betweenness", "y", FixtureValueKind::post, "5", 0},
        };
        catalog.push_back(std::move(f));
    }
    {
        Fixture f;
        f.id = "cc-structural";
        f.description = "triangle vs 2-star: closer neighbors, same closeness";
        f.graph = Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}});
        f.labels = {{"u", 0}, {"u1", 1}, {"u2", 2}, {"v", 3}, {"v1", 4}, {"v2", 5}};
        f.expected = {{"closeness", AxiomId::structural_consistency, CheckStatus::violated}};
        f.values = {
            {"closeness", "u", FixtureValueKind::pre, "2", 0},
            {"closeness", "u1", FixtureValueKind::pre, "2", 0},
            {"closeness", "u2", FixtureValueKind::pre, "2", 0},
            {"closeness", "v", FixtureValueKind::pre, "2", 0},
            {"closeness", "v1", FixtureValueKind::pre, "3/2", 0},
            {"closeness", "v2", FixtureValueKind::pre, "3/2", 0},
        };
        catalog.push_back(std::move(f));
    }
    {
        Fixture f;
        f.id = "bc-monotonicity";
        f.description = "star plus tail; joining two leaves leaves their betweenness at zero";
        f.graph = Graph(4, {{0, 2}, {1, 2}, {2, 3}});
        f.added_edge = {{0, 1}};
        f.labels = {{"u", 0}, {"v", 1}, {"w", 2}, {"x", 3}};
        f.expected = {{"betweenness", AxiomId::edge_monotonicity, CheckStatus::violated}};
        f.values = {
            {"betweenness", "u", FixtureValueKind::pre, "0", 0},
            {"betweenness", "u", FixtureValueKind::post, "0", 0},
            {"betweenness", "v", FixtureValueKind::pre, "0", 0},
            {"betweenness", "v", FixtureValueKind::post, "0", 0},
        };
        catalog.push_back(std::move(f));
    }
    {
        Fixture f;
        f.id = "bc-structural";
        f.description = "triangle with pendant tails vs 2-star: dominated neighbors, higher score";
        f.graph = Graph(8, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}, {5, 6}, {5, 7}});
        f.labels = {{"u", 0},  {"u1", 1}, {"u2", 2}, {"u11", 3},
                    {"u21", 4}, {"v", 5},  {"v1", 6}, {"v2", 7}};
        f.expected = {{"betweenness", AxiomId::structural_consistency, CheckStatus::violated}};
        f.values = {
            {"betweenness", "u", FixtureValueKind::pre, "0", 0},
            {"betweenness", "u1", FixtureValueKind::pre, "3", 0},
            {"betweenness", "u2", FixtureValueKind::pre, "3", 0},
            {"betweenness", "u11", FixtureValueKind::pre, "0", 0},
            {"betweenness", "u21", FixtureValueKind::pre, "0", 0},
            {"betweenness", "v", FixtureValueKind::pre, "1", 0},
            {"betweenness", "v1", FixtureValueKind::pre, "0", 0},
            {"betweenness", "v2", FixtureValueKind::pre, "0", 0},
        };
        catalog.push_back(std::move(f));
    }
    {
        Fixture f;
        f.id = "wdc-diminishing";
        f.description = "14-node tree with a heavy hub; the far side gains more from the chord";
        std::vector<Edge> edges = {{0, 2}, {2, 5}, {5, 6}, {1, 6}, {0, 4}, {4, 3}};
        for (NodeId leaf = 7; leaf <= 13; ++leaf) {
            edges.push_back({6, leaf});
        }
        f.graph = Graph(14, edges);
        f.added_edge = {{0, 1}};
        f.labels = {{"u", 0},  {"v", 1},  {"z1", 2}, {"z2", 3}, {"m1", 4},
                    {"m2", 5}, {"x", 6},  {"x1", 7}, {"x7", 13}};
        f.expected = {{"weighted-degree", AxiomId::diminishing_impact, CheckStatus::violated}};
        f.values = {
            {"weighted-degree", "z1", FixtureValueKind::abs_delta, "5/3", 0},
            {"weighted-degree", "z2", FixtureValueKind::abs_delta, "101/60", 0},
        };
        catalog.push_back(std::move(f));
    }
    {
        Fixture f;
        f.id = "wdc-structural";
        f.description = "diamond with tails vs full binary tree: dominated neighbors, higher score";
        f.graph = Graph(13, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5},
                             {6, 7}, {6, 8}, {7, 9}, {7, 10}, {8, 11}, {8, 12}});
        f.labels = {{"u", 0},  {"u1", 1}, {"u2", 2}, {"u3", 3},  {"u4", 4},  {"u5", 5}, {"v", 6},
                    {"v1", 7}, {"v2", 8}, {"v3", 9}, {"v4", 10}, {"v5", 11}, {"v6", 12}};
        f.expected = {{"weighted-degree", AxiomId::structural_consistency, CheckStatus::violated}};
        f.values = {
            {"weighted-degree", "u1", FixtureValueKind::pre, "8", 0},
            {"weighted-degree", "u2", FixtureValueKind::pre, "8", 0},
            {"weighted-degree", "v1", FixtureValueKind::pre, "37/6", 0},
            {"weighted-degree", "v2", FixtureValueKind::pre, "37/6", 0},
            {"weighted-degree", "u", FixtureValueKind::pre, "20/3", 0},
            {"weighted-degree", "v", FixtureValueKind::pre, "8", 0},
        };
        catalog.push_back(std::move(f));
    }
    {
        Fixture f;
        f.id = "ec-locality";
        f.description = "2-path plus lone edge; the minor component scores zero in the full graph";
        f.graph = Graph(5, {{0, 1}, {0, 2}, {3, 4}});
        f.labels = {{"u1", 0}, {"u2", 1}, {"u5", 2}, {"u3", 3}, {"u4", 4}};
        f.expected = {{"eigenvector", AxiomId::locality, CheckStatus::violated}};
        f.values = {
            {"eigenvector", "u1", FixtureValueKind::pre, "0.7071", kFigureTolerance},
            {"eigenvector", "u2", FixtureValueKind::pre, "0.5", kFigureTolerance},
            {"eigenvector", "u5", FixtureValueKind::pre, "0.5", kFigureTolerance},
            {"eigenvector", "u3", FixtureValueKind::pre, "0", kFigureTolerance},
            {"eigenvector", "u4", FixtureValueKind::pre, "0", kFigureTolerance},
            {"eigenvector", "", FixtureValueKind::lambda_pre, "1.4142", kFigureTolerance},
        };
        catalog.push_back(std::move(f));
    }
    {
        Fixture f;
        f.id = "ec-monotonicity";
        f.description = "edge plus isolated node; attaching the isolated node leaves u unchanged";
        f.graph = Graph(3, {{0, 1}});
        f.added_edge = {{0, 2}};
        f.labels = {{"u", 0}, {"v", 1}, {"w", 2}};
        f.expected = {{"eigenvector", AxiomId::edge_monotonicity, CheckStatus::violated}};
        f.values = {
            {"eigenvector", "u", FixtureValueKind::pre, "0.7071", kFigureTolerance},
            {"eigenvector", "u", FixtureValueKind::post, "0.7071", kFigureTolerance},
            {"eigenvector", "v", FixtureValueKind::pre, "0.7071", kFigureTolerance},
            {"eigenvector", "v", FixtureValueKind::post, "0.5", kFigureTolerance},
            {"eigenvector", "w", FixtureValueKind::pre, "0", kFigureTolerance},
            {"eigenvector", "w", FixtureValueKind::post, "0.5", kFigureTolerance},
        };
        catalog.push_back(std::move(f));
    }
    {
        Fixture f;
        f.id = "ec-diminishing";
        f.description = "5-node near-cycle; the 0-hop endpoint moves less than a 1-hop node";
        f.graph = Graph(5, {{0, 1}, {0, 4}, {1, 2}, {1, 3}, {3, 4}});
        f.added_edge = {{1, 4}};
        f.labels = {{"u1", 0}, {"u2", 1}, {"u3", 2}, {"u4", 3}, {"u5", 4}};
        f.expected = {{"eigenvector", AxiomId::diminishing_impact, CheckStatus::violated}};
        f.values = {
            {"eigenvector", "u1", FixtureValueKind::pre, "0.4647", kFigureTolerance},
            {"eigenvector", "u2", FixtureValueKind::pre, "0.5573", kFigureTolerance},
            {"eigenvector", "u3", FixtureValueKind::pre, "0.2610", kFigureTolerance},
            {"eigenvector", "u4", FixtureValueKind::pre, "0.4647", kFigureTolerance},
            {"eigenvector", "u5", FixtureValueKind::pre, "0.4352", kFigureTolerance},
            {"eigenvector", "u1", FixtureValueKind::post, "0.4119", kFigureTolerance},
            {"eigenvector", "u2", FixtureValueKind::post, "0.5825", kFigureTolerance},
            {"eigenvector", "u3", FixtureValueKind::post, "0.2169", kFigureTolerance},
            {"eigenvector", "u4", FixtureValueKind::post, "0.4119", kFigureTolerance},
            {"eigenvector", "u5", FixtureValueKind::post, "0.5237", kFigureTolerance},
            {"eigenvector", "u2", FixtureValueKind::abs_delta, "0.0252", kFigureTolerance},
            {"eigenvector", "u1", FixtureValueKind::abs_delta, "0.0528", kFigureTolerance},
        };
        catalog.push_back(std::move(f));
    }
    {
        Fixture f;
        f.id = "ddc-structural";
        f.description = "equal hop-degree profiles at the roots, dominated profiles below";
        f.graph = Graph(12, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {1, 2}, {3, 4},
                             {5, 6}, {5, 7}, {6, 8}, {6, 9}, {7, 10}, {7, 11}});
        f.labels = {{"u", 0},   {"u1", 1},  {"u2", 2},  {"u11", 3}, {"u22", 4},  {"v", 5},
                    {"v1", 6},  {"v2", 7},  {"v11", 8}, {"v12", 9}, {"v21", 10}, {"v22", 11}};
        f.expected = {{"decaying-degree", AxiomId::structural_consistency, CheckStatus::violated}};
        f.values = {
            {"decaying-degree", "u", FixtureValueKind::pre, "10585/5184", 0},
            {"decaying-degree", "v", FixtureValueKind::pre, "10585/5184", 0},
            {"decaying-degree", "u1", FixtureValueKind::pre, "31609/10368", 0},
            {"decaying-degree", "v1", FixtureValueKind::pre, "4520665/1492992", 0},
        };
        catalog.push_back(std::move(f));
    }
    return catalog;
}

} // namespace

const std::vector<Fixture> &fixture_catalog() {
    static const std::vector<Fixture> catalog = build_catalog();
    return catalog;
}

std::vector<std::string> fixture_ids() {
    std::vector<std::string> ids;
    for (const auto &f : fixture_catalog()) {
        ids.push_back(f.id);
    }
    return ids;
}

const Fixture &paper_fixture(const std::string &id) {
    for (const auto &f : fixture_catalog()) {
        if (f.id == id) {
            return f;
        }
    }
    throw UnknownFixture("no fixture with id '" + id + "'");
}

std::optional<std::string> replay_fixture_value(const Fixture &fixture, const FixtureValue &value,
                                                const std::vector<MeasureHandle> &registry) {
    const MeasureHandle &m = find_measure(registry, value.measure);

    auto fail = [&](const std::string &got) {
        std::ostringstream out;
        out << fixture.id << ": " << value.measure;
        if (!value.node.empty()) {
            out << "[" << value.node << "]";
        }
        out << " expected " << value.expected << ", got " << got;
        return out.str();
    };

    if (value.kind == FixtureValueKind::lambda_pre || value.kind == FixtureValueKind::lambda_post) {
        Graph g = fixture.graph;
        if (value.kind == FixtureValueKind::lambda_post) {
            if (!fixture.added_edge) {
                return fail("<fixture has no added edge>");
            }
            g = g.with_edge(fixture.added_edge->first, fixture.added_edge->second);
        }
        const double lambda = eigenvector_centrality(g).lambda_max;
        const double expected = std::stod(value.expected);
        if (std::fabs(lambda - expected) > value.tolerance) {
            return fail(std::to_string(lambda));
        }
        return std::nullopt;
    }

    const NodeId node = fixture.node_of(value.node);
    auto evaluate_post = [&]() {
        if (!fixture.added_edge) {
            throw InvalidArguments("fixture '" + fixture.id + "' has no added edge");
        }
        return m.evaluate(
            fixture.graph.with_edge(fixture.added_edge->first, fixture.added_edge->second));
    };

    Score got = [&]() {
        switch (value.kind) {
        case FixtureValueKind::pre: return m.evaluate(fixture.graph).at(node);
        case FixtureValueKind::post: return evaluate_post().at(node);
        case FixtureValueKind::abs_delta:
            return abs_difference(evaluate_post().at(node), m.evaluate(fixture.graph).at(node));
        default: throw InvalidArguments("unexpected fixture value kind");
        }
    }();

    if (value.tolerance == 0.0) {
        const Rational expected = rational_from_string(value.expected);
        if (!got.is_exact() || got.rational() != expected) {
            return fail(got.to_string());
        }
        return std::nullopt;
    }
    const double expected = std::stod(value.expected);
    if (std::fabs(got.as_double() - expected) > value.tolerance) {
        return fail(got.to_string());
    }
    return std::nullopt;
}

std::vector<std::string> replay_fixture(const Fixture &fixture,
                                        const std::vector<MeasureHandle> &registry) {
    std::vector<std::string> problems;
    for (const auto &value : fixture.values) {
        if (auto problem = replay_fixture_value(fixture, value, registry)) {
            problems.push_back(std::move(*problem));
        }
    }
    for (const auto &expectation : fixture.expected) {
        const MeasureHandle &m = find_measure(registry, expectation.measure);
        const AxiomVerdict verdict = check_axiom(expectation.axiom, m, fixture.graph);
        if (verdict.status != expectation.status) {
            problems.push_back(fixture.id + ": " + expectation.measure + " on " +
                               axiom_name(expectation.axiom) + " expected " +
                               (expectation.status == CheckStatus::violated ? "violated"
                                                                            : "satisfied") +
                               ", checker disagrees");
        }
    }
    return problems;
}

} // namespace centlab
