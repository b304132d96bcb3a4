#include "centlab/search.hpp"

#include <algorithm>
#include <random>

#include "centlab/enumeration.hpp"
#include "centlab/fixtures.hpp"
#include "ordered_scan.hpp"

namespace centlab {

void SearchBudget::validate() const {
    if (n_max < 2) {
        throw InvalidParameter("search requires n_max >= 2");
    }
    if (jobs < 1) {
        throw InvalidParameter("jobs must be >= 1");
    }
    if (mode == SearchMode::exhaustive) {
        const NodeId cap = dedup_isomorphic ? kMaxDedupEnumeration : kMaxLabeledEnumeration;
        if (n_max > cap) {
            throw BudgetExceeded("exhaustive search capped at n_max = " + std::to_string(cap) +
                                 (dedup_isomorphic ? " with dedup" : ""));
        }
    } else {
        if (random_samples < 1) {
            throw InvalidParameter("random search requires at least one sample");
        }
        if (!(edge_probability > 0.0 && edge_probability < 1.0)) {
            throw InvalidParameter("edge probability must lie strictly between 0 and 1");
        }
    }
}

namespace {

// Deterministic per (seed, index): parallel sampling order cannot matter.
Graph sample_graph(std::uint64_t seed, std::uint64_t index, NodeId n_max, double edge_probability) {
    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    const NodeId n = 2 + static_cast<NodeId>(rng() % static_cast<std::uint64_t>(n_max - 1));
    const auto threshold =
        static_cast<std::uint64_t>(edge_probability * 9007199254740992.0); // 2^53
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if ((rng() >> 11) < threshold) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, edges);
}

struct ScanAggregate {
    std::uint64_t checked = 0;
    std::uint64_t vacuous = 0;
    std::optional<Witness> witness;
};

ScanAggregate scan_budget(const MeasureHandle &m, AxiomId axiom, const SearchBudget &budget,
                          const CheckOptions &options) {
    ScanAggregate total;

    if (budget.mode == SearchMode::random) {
        auto outcome = detail::ordered_scan(
            budget.random_samples, budget.jobs, true,
            [&](std::uint64_t index) -> std::optional<AxiomVerdict> {
                return check_axiom(
                    axiom, m, sample_graph(budget.seed, index, budget.n_max, budget.edge_probability),
                    options);
            });
        total.checked = outcome.checked;
        total.vacuous = outcome.vacuous;
        total.witness = std::move(outcome.witness);
        return total;
    }

    for (NodeId n = 2; n <= budget.n_max; ++n) {
        auto outcome = detail::ordered_scan(
            labeled_graph_count(n), budget.jobs, true,
            [&](std::uint64_t mask) -> std::optional<AxiomVerdict> {
                Graph g = graph_from_mask(n, mask);
                if (budget.dedup_isomorphic && canonical_mask(g) != mask) {
                    return std::nullopt;
                }
                return check_axiom(axiom, m, g, options);
            });
        total.checked += outcome.checked;
        total.vacuous += outcome.vacuous;
        if (outcome.witness) {
            total.witness = std::move(outcome.witness);
            break;
        }
    }
    return total;
}

} // namespace

std::optional<Witness> find_counterexample(const MeasureHandle &m, AxiomId axiom,
                                           const SearchBudget &budget,
                                           const CheckOptions &options) {
    budget.validate();
    return scan_budget(m, axiom, budget, options).witness;
}

SatisfiabilityMatrix build_satisfiability_matrix(const SearchBudget &budget,
                                                 const std::vector<MeasureHandle> &registry,
                                                 const CheckOptions &options) {
    budget.validate();
    SatisfiabilityMatrix matrix;
    matrix.budget = budget;

    for (const auto &measure : registry) {
        MatrixRow row;
        row.measure = measure.name;
        row.display_name = measure.display_name;

        for (AxiomId axiom : kAllAxioms) {
            MatrixCell cell;
            cell.axiom = axiom;
            cell.numeric = measure.exactness == Exactness::numeric;

            // The catalog's counterexamples come first: they settle violated
            // cells whose smallest witness lies beyond the search budget.
            for (const auto &fixture : fixture_catalog()) {
                const bool claims_violation = std::any_of(
                    fixture.expected.begin(), fixture.expected.end(), [&](const auto &e) {
                        return e.measure == measure.name && e.axiom == axiom &&
                               e.status == CheckStatus::violated;
                    });
                if (!claims_violation) {
                    continue;
                }
                AxiomVerdict verdict = check_axiom(axiom, measure, fixture.graph, options);
                if (verdict.status == CheckStatus::violated) {
                    cell.status = CellStatus::violated;
                    cell.witness = std::move(verdict.witness);
                    cell.scope.from_fixture = true;
                    cell.scope.fixture_id = fixture.id;
                    break;
                }
            }

            if (cell.status != CellStatus::violated) {
                ScanAggregate scan = scan_budget(measure, axiom, budget, options);
                cell.scope.exhaustive = budget.mode == SearchMode::exhaustive;
                cell.scope.n_max = budget.n_max;
                cell.scope.graphs_checked = scan.checked;
                cell.scope.samples = budget.mode == SearchMode::random ? budget.random_samples : 0;
                cell.scope.seed = budget.seed;
                cell.vacuous_count = scan.vacuous;
                if (scan.witness) {
                    cell.status = CellStatus::violated;
                    cell.witness = std::move(scan.witness);
                } else if (scan.checked > 0 && scan.vacuous == scan.checked) {
                    cell.status = CellStatus::satisfied_vacuous;
                    cell.note = "the axiom's premise never fires on any graph in scope";
                    if (measure.name == "uniform" && axiom == AxiomId::structural_consistency) {
                        cell.note += "; a constant measure admits no strictly dominating "
                                     "neighbor matching, so the cell holds only vacuously "
                                     "(conventionally tabulated as a failure)";
                    }
                } else {
                    cell.status = CellStatus::satisfied;
                }
            }
            row.cells.push_back(std::move(cell));
        }
        matrix.rows.push_back(std::move(row));
    }
    return matrix;
}

} // namespace centlab
