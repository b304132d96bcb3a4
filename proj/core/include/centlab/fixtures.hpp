#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "centlab/axioms.hpp"
#include "centlab/graph.hpp"

namespace centlab {

/// Which quantity a fixture value pins down.
enum class FixtureValueKind {
    pre,        // measure value on the base graph
    post,       // measure value after adding added_edge
    abs_delta,  // |post - pre| at one node
    lambda_pre, // dominant adjacency eigenvalue of the base graph
    lambda_post
};

struct FixtureValue {
    std::string measure; // registry name
    std::string node;    // role label; empty for lambda kinds
    FixtureValueKind kind = FixtureValueKind::pre;
    std::string expected;  // exact fraction "p/q" or decimal for floats
    double tolerance = 0.0; // 0 means exact rational equality
};

struct FixtureExpectation {
    std::string measure;
    AxiomId axiom;
    CheckStatus status = CheckStatus::violated;
};

/**
 * A frozen counterexample (or worked-example) graph with role labels,
 * the axiom verdicts it certifies and the point values it must reproduce.
 */
struct Fixture {
    std::string id;
    std::string description;
    Graph graph;
    std::optional<std::pair<NodeId, NodeId>> added_edge;
    std::vector<std::pair<std::string, NodeId>> labels; // role -> node
    std::vector<FixtureExpectation> expected;
    std::vector<FixtureValue> values;

    NodeId node_of(const std::string &label) const; // throws InvalidArguments
};

/// All fixture ids, in catalog order.
std::vector<std::string> fixture_ids();

/// Lookup by id. Throws UnknownFixture.
const Fixture &paper_fixture(const std::string &id);

const std::vector<Fixture> &fixture_catalog();

/// Replays one pinned value through the measure registry; empty result means
/// the value reproduced, otherwise a diagnostic message.
std::optional<std::string> replay_fixture_value(const Fixture &fixture, const FixtureValue &value,
                                                const std::vector<MeasureHandle> &registry);

/// Replays everything a fixture pins (values and verdict statuses).
/// Returns diagnostics for any mismatch; empty means fully reproduced.
std::vector<std::string> replay_fixture(const Fixture &fixture,
                                        const std::vector<MeasureHandle> &registry);

} // namespace centlab
