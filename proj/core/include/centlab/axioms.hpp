#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "centlab/graph.hpp"
#include "centlab/measures.hpp"
#include "centlab/score.hpp"

namespace centlab {

enum class AxiomId {
    isomorphic_invariance = 1, // relabeling never changes scores
    locality = 2,              // score depends only on the node's component
    isolated_minima = 3,       // isolated nodes score exactly zero
    edge_monotonicity = 4,     // a new edge strictly raises both endpoints
    diminishing_impact = 5,    // |change| strictly shrinks with hop distance
    structural_consistency = 6 // dominating neighborhoods force dominance
};

constexpr std::array<AxiomId, 6> kAllAxioms = {
    AxiomId::isomorphic_invariance, AxiomId::locality,         AxiomId::isolated_minima,
    AxiomId::edge_monotonicity,     AxiomId::diminishing_impact, AxiomId::structural_consistency,
};

int axiom_number(AxiomId a);
AxiomId axiom_from_number(int number); // throws InvalidArguments
std::string axiom_name(AxiomId a);

enum class CheckStatus { satisfied, violated };

/**
 * Self-verifying counterexample: the stored graph(s), named nodes and values
 * reproduce the falsifying inequality when the measure is re-evaluated.
 */
struct Witness {
    Graph graph;
    std::optional<Graph> second_graph;              // permuted graph (axiom 1)
    std::optional<std::pair<NodeId, NodeId>> added_edge; // axioms 4, 5
    std::optional<std::vector<NodeId>> permutation; // axiom 1
    std::vector<std::pair<std::string, NodeId>> nodes;  // role -> node
    std::vector<std::pair<std::string, Score>> values;  // label -> value
    std::string description;
};

struct AxiomVerdict {
    AxiomId axiom;
    std::string measure_name;
    CheckStatus status = CheckStatus::satisfied;
    bool vacuous = false; // the axiom's precondition never triggered
    bool numeric = false; // verdict relied on float comparisons
    std::optional<Witness> witness;
};

struct IsomorphismCheckOptions {
    int trials = 20;         // sampled permutations (identity and reversal
                             // are always included on top)
    bool exhaustive = false; // all n! permutations, honored for n <= 7
    std::uint64_t seed = 0;
};

struct DiminishingImpactOptions {
    /// Default is the universal reading: every node of the nearer layer must
    /// beat every node of the farther layer. The existential alternative only
    /// requires some pair per layer pair.
    bool existential = false;
};

AxiomVerdict check_isomorphic_invariance(const MeasureHandle &m, const Graph &g,
                                         const IsomorphismCheckOptions &options = {});
AxiomVerdict check_locality(const MeasureHandle &m, const Graph &g);
AxiomVerdict check_isolated_minima(const MeasureHandle &m, const Graph &g);
AxiomVerdict check_edge_monotonicity(const MeasureHandle &m, const Graph &g);
AxiomVerdict check_diminishing_impact(const MeasureHandle &m, const Graph &g,
                                      const DiminishingImpactOptions &options = {});
AxiomVerdict check_structural_consistency(const MeasureHandle &m, const Graph &g);

struct CheckOptions {
    IsomorphismCheckOptions isomorphism;
    DiminishingImpactOptions diminishing;
};

/// Dispatch to the checker for one axiom.
AxiomVerdict check_axiom(AxiomId axiom, const MeasureHandle &m, const Graph &g,
                         const CheckOptions &options = {});

/**
 * True iff some injection from b into a matches every b-value to a strictly
 * greater a-value. Decided by greedy sorted matching: after sorting both
 * descending, a[i] > b[i] must hold for all i < |b| (an exchange argument
 * shows the sorted matching dominates any other). A non-empty matching is
 * required, so b = [] yields false. Throws InvalidArguments when |a| < |b|.
 */
bool dominating_injection_exists(std::vector<Score> a, std::vector<Score> b);

/// Aggregate over a stream of graphs for one axiom.
struct AxiomAggregate {
    AxiomId axiom;
    CheckStatus status = CheckStatus::satisfied;
    bool numeric = false;
    std::uint64_t graphs_checked = 0;
    std::uint64_t vacuous_count = 0;
    std::optional<Witness> first_witness;          // lowest graph index wins
    std::uint64_t first_witness_index = 0;
};

struct SuiteConfig {
    CheckOptions check;
    bool short_circuit = true; // stop an axiom at its first violation
    int jobs = 1;
};

/**
 * Runs all six checkers over a graph list. Results are independent of
 * scheduling: with several jobs the lowest-index witness is kept, exactly as
 * in a sequential scan.
 */
std::array<AxiomAggregate, 6> run_axiom_suite(const MeasureHandle &m,
                                              const std::vector<Graph> &graphs,
                                              const SuiteConfig &config = {});

/// Re-evaluates the measure on the stored graph(s) and confirms the witness
/// still exhibits its violation (exact for rationals, epsilon for floats).
bool replay_witness(const MeasureHandle &m, AxiomId axiom, const Witness &w);

} // namespace centlab
