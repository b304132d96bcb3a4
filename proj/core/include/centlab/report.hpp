#pragma once

#include <optional>
#include <string>
#include <vector>

#include "centlab/axioms.hpp"
#include "centlab/fixtures.hpp"
#include "centlab/score.hpp"
#include "centlab/search.hpp"

namespace centlab {

enum class ReportFormat { plain, markdown, json };

struct RenderOptions {
    ReportFormat format = ReportFormat::plain;
    /// Exact values as fractions by default; >= 0 renders k-digit decimals.
    int decimal_digits = -1;
};

std::string render_centralities(const Graph &g, const std::vector<CentralityVector> &vectors,
                                const RenderOptions &options);

std::string render_verdicts(const std::vector<AxiomVerdict> &verdicts,
                            const RenderOptions &options);

std::string render_matrix(const SatisfiabilityMatrix &matrix, const RenderOptions &options);

std::string render_witness_block(const Witness &w, const RenderOptions &options);

/// Search summary: a witness or a "none within budget" statement.
std::string render_search_result(const MeasureHandle &m, AxiomId axiom,
                                 const std::optional<Witness> &witness,
                                 const SearchBudget &budget, const RenderOptions &options);

std::string render_fixture_list(const std::vector<Fixture> &fixtures, const RenderOptions &options);

/// JSON manifest for an exported fixture directory.
std::string fixture_manifest_json(const std::vector<Fixture> &fixtures);

std::string witness_to_json(const Witness &w);
std::string verdict_to_json(const AxiomVerdict &v);
std::string matrix_to_json(const SatisfiabilityMatrix &m);

} // namespace centlab
