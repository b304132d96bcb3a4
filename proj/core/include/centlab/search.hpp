#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "centlab/axioms.hpp"
#include "centlab/graph.hpp"
#include "centlab/measures.hpp"

namespace centlab {

enum class SearchMode { exhaustive, random };

struct SearchBudget {
    NodeId n_max = 5;
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t random_samples = 1000;
    double edge_probability = 0.5; // random mode only, must be in (0,1)
    std::uint64_t seed = 0;
    bool dedup_isomorphic = false;
    int jobs = 1;

    /// Throws InvalidParameter / BudgetExceeded on inconsistent settings.
    void validate() const;
};

/**
 * First witness violating the axiom, scanning graphs of increasing n and then
 * increasing edge-bitmask (exhaustive) or a seeded G(n,p) sample stream with
 * n drawn uniformly from [2, n_max] (random). Deterministic for fixed budget;
 * parallel scans return exactly the sequential result.
 */
std::optional<Witness> find_counterexample(const MeasureHandle &m, AxiomId axiom,
                                           const SearchBudget &budget,
                                           const CheckOptions &options = {});

enum class CellStatus { satisfied, satisfied_vacuous, violated };

struct EvidenceScope {
    bool exhaustive = false;      // swept every graph up to n_max
    NodeId n_max = 0;
    std::uint64_t graphs_checked = 0;
    std::uint64_t samples = 0;    // random mode
    std::uint64_t seed = 0;
    bool from_fixture = false;    // witness came from the fixture catalog
    std::string fixture_id;
};

struct MatrixCell {
    AxiomId axiom;
    CellStatus status = CellStatus::satisfied;
    bool numeric = false;
    std::uint64_t vacuous_count = 0;
    std::optional<Witness> witness; // present iff violated
    EvidenceScope scope;
    std::string note; // e.g. the vacuous-constant-measure caveat
};

struct MatrixRow {
    std::string measure;      // registry name
    std::string display_name;
    std::vector<MatrixCell> cells; // axiom 1..6
};

/// 7 measures x 6 axioms with per-cell evidence.
struct SatisfiabilityMatrix {
    std::vector<MatrixRow> rows;
    SearchBudget budget;
};

/**
 * Builds the full matrix: fixture counterexamples are replayed first, the
 * remaining cells are settled by the budgeted search. Satisfied cells record
 * their verification scope; they are never claims beyond it.
 */
SatisfiabilityMatrix build_satisfiability_matrix(const SearchBudget &budget,
                                                 const std::vector<MeasureHandle> &registry,
                                                 const CheckOptions &options = {});

} // namespace centlab
