#include "centlab/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "centlab/rational.hpp"

namespace centlab {

namespace {

using nlohmann::json;

std::string float_text(double v) {
    std::ostringstream out;
    out << std::setprecision(10) << v;
    return out.str();
}

std::string score_text(const Score &s, const RenderOptions &options) {
    if (s.is_exact() && options.decimal_digits >= 0) {
        return rational_to_decimal(s.rational(), options.decimal_digits);
    }
    return s.to_string();
}

json score_json(const Score &s) {
    if (s.is_exact()) {
        return rational_to_string(s.rational());
    }
    return s.numeric_value();
}

json graph_json(const Graph &g) {
    json doc;
    doc["n"] = g.node_count();
    doc["edges"] = json::array();
    for (const auto &[u, v] : g.edges()) {
        doc["edges"].push_back({u, v});
    }
    return doc;
}

json witness_json(const Witness &w) {
    json doc;
    doc["graph"] = graph_json(w.graph);
    if (w.second_graph) {
        doc["second_graph"] = graph_json(*w.second_graph);
    }
    if (w.added_edge) {
        doc["added_edge"] = {w.added_edge->first, w.added_edge->second};
    }
    if (w.permutation) {
        doc["permutation"] = *w.permutation;
    }
    doc["nodes"] = json::array();
    for (const auto &[role, node] : w.nodes) {
        doc["nodes"].push_back({{"role", role}, {"node", node}});
    }
    doc["values"] = json::array();
    for (const auto &[label, value] : w.values) {
        doc["values"].push_back({{"label", label}, {"value", score_json(value)}});
    }
    doc["description"] = w.description;
    return doc;
}

std::string edge_list_text(const Graph &g) {
    std::ostringstream out;
    out << "n=" << g.node_count() << " edges={";
    bool first = true;
    for (const auto &[u, v] : g.edges()) {
        out << (first ? "" : ", ") << "{" << u << "," << v << "}";
        first = false;
    }
    out << "}";
    return out.str();
}

std::string cell_symbol(const MatrixCell &cell) {
    switch (cell.status) {
    case CellStatus::violated: return "✗";
    case CellStatus::satisfied_vacuous: return "✓*";
    case CellStatus::satisfied: return "✓";
    }
    return "?";
}

std::string scope_text(const MatrixCell &cell) {
    std::ostringstream out;
    if (cell.status == CellStatus::violated) {
        if (cell.scope.from_fixture) {
            out << "witness from fixture '" << cell.scope.fixture_id << "'";
        } else if (cell.scope.exhaustive) {
            out << "witness found scanning " << cell.scope.graphs_checked
                << " graphs, n <= " << cell.scope.n_max;
        } else {
            out << "witness found in " << cell.scope.graphs_checked << " samples (seed "
                << cell.scope.seed << ")";
        }
    } else {
        if (cell.scope.exhaustive) {
            out << "exhaustive n <= " << cell.scope.n_max << " (" << cell.scope.graphs_checked
                << " graphs)";
        } else {
            out << "sampled (" << cell.scope.samples << " samples, seed " << cell.scope.seed
                << ")";
        }
        if (cell.vacuous_count > 0) {
            out << ", " << cell.vacuous_count << " vacuous";
        }
    }
    if (!cell.note.empty()) {
        out << "; " << cell.note;
    }
    return out.str();
}

json budget_json(const SearchBudget &budget) {
    json doc;
    doc["n_max"] = budget.n_max;
    doc["mode"] = budget.mode == SearchMode::exhaustive ? "exhaustive" : "random";
    doc["random_samples"] = budget.random_samples;
    doc["edge_probability"] = budget.edge_probability;
    doc["seed"] = budget.seed;
    doc["dedup_isomorphic"] = budget.dedup_isomorphic;
    return doc;
}

std::string status_name(CheckStatus status) {
    return status == CheckStatus::violated ? "violated" : "satisfied";
}

std::string cell_status_name(CellStatus status) {
    switch (status) {
    case CellStatus::violated: return "violated";
    case CellStatus::satisfied_vacuous: return "satisfied-vacuous";
    case CellStatus::satisfied: return "satisfied";
    }
    return "?";
}

} // namespace

std::string render_witness_block(const Witness &w, const RenderOptions &options) {
    std::ostringstream out;
    out << "  witness: " << w.description << "\n";
    out << "    graph: " << edge_list_text(w.graph) << "\n";
    if (w.second_graph) {
        out << "    second graph: " << edge_list_text(*w.second_graph) << "\n";
    }
    if (w.added_edge) {
        out << "    added edge: {" << w.added_edge->first << "," << w.added_edge->second << "}\n";
    }
    if (w.permutation) {
        out << "    permutation:";
        for (NodeId image : *w.permutation) {
            out << " " << image;
        }
        out << "\n";
    }
    if (!w.nodes.empty()) {
        out << "    nodes:";
        for (const auto &[role, node] : w.nodes) {
            out << " " << role << "=" << node;
        }
        out << "\n";
    }
    for (const auto &[label, value] : w.values) {
        out << "    " << label << " = " << score_text(value, options) << "\n";
    }
    return out.str();
}

std::string render_centralities(const Graph &g, const std::vector<CentralityVector> &vectors,
                                const RenderOptions &options) {
    if (options.format == ReportFormat::json) {
        json doc;
        doc["graph"] = graph_json(g);
        doc["centralities"] = json::array();
        for (const auto &vec : vectors) {
            doc["centralities"].push_back(json::parse(vec.to_json()));
        }
        return doc.dump(2) + "\n";
    }

    std::ostringstream out;
    if (options.format == ReportFormat::markdown) {
        out << "| measure |";
        for (NodeId v = 0; v < g.node_count(); ++v) {
            out << " " << v << " |";
        }
        out << "\n|---|";
        for (NodeId v = 0; v < g.node_count(); ++v) {
            out << "---|";
        }
        out << "\n";
        for (const auto &vec : vectors) {
            out << "| " << vec.measure_name() << " |";
            for (NodeId v = 0; v < g.node_count(); ++v) {
                out << " " << score_text(vec.at(v), options) << " |";
            }
            out << "\n";
        }
        return out.str();
    }

    out << "graph: " << edge_list_text(g) << "\n";
    for (const auto &vec : vectors) {
        out << vec.measure_name() << ": [";
        for (NodeId v = 0; v < g.node_count(); ++v) {
            out << (v ? ", " : "") << score_text(vec.at(v), options);
        }
        out << "]\n";
    }
    return out.str();
}

std::string verdict_to_json(const AxiomVerdict &v) {
    json doc;
    doc["axiom"] = axiom_number(v.axiom);
    doc["axiom_name"] = axiom_name(v.axiom);
    doc["measure"] = v.measure_name;
    doc["status"] = status_name(v.status);
    doc["vacuous"] = v.vacuous;
    doc["numeric"] = v.numeric;
    if (v.witness) {
        doc["witness"] = witness_json(*v.witness);
    }
    return doc.dump();
}

std::string render_verdicts(const std::vector<AxiomVerdict> &verdicts,
                            const RenderOptions &options) {
    if (options.format == ReportFormat::json) {
        json doc;
        doc["verdicts"] = json::array();
        for (const auto &v : verdicts) {
            doc["verdicts"].push_back(json::parse(verdict_to_json(v)));
        }
        return doc.dump(2) + "\n";
    }

    std::ostringstream out;
    for (const auto &v : verdicts) {
        if (options.format == ReportFormat::markdown) {
            out << "- **" << v.measure_name << "** / axiom " << axiom_number(v.axiom) << " ("
                << axiom_name(v.axiom) << "): ";
        } else {
            out << v.measure_name << " / axiom " << axiom_number(v.axiom) << " ("
                << axiom_name(v.axiom) << "): ";
        }
        out << (v.status == CheckStatus::violated ? "VIOLATED" : "satisfied");
        if (v.vacuous) {
            out << " (vacuous: the premise never fires)";
        }
        if (v.numeric) {
            out << " [numeric]";
        }
        out << "\n";
        if (v.witness) {
            out << render_witness_block(*v.witness, options);
        }
    }
    return out.str();
}

std::string matrix_to_json(const SatisfiabilityMatrix &m) {
    json doc;
    doc["budget"] = budget_json(m.budget);
    doc["rows"] = json::array();
    for (const auto &row : m.rows) {
        json row_doc;
        row_doc["measure"] = row.measure;
        row_doc["display_name"] = row.display_name;
        row_doc["cells"] = json::array();
        for (const auto &cell : row.cells) {
            json cell_doc;
            cell_doc["axiom"] = axiom_number(cell.axiom);
            cell_doc["status"] = cell_status_name(cell.status);
            cell_doc["numeric"] = cell.numeric;
            cell_doc["vacuous_count"] = cell.vacuous_count;
            cell_doc["evidence"] = scope_text(cell);
            if (cell.witness) {
                cell_doc["witness"] = witness_json(*cell.witness);
            }
            if (!cell.note.empty()) {
                cell_doc["note"] = cell.note;
            }
            row_doc["cells"].push_back(std::move(cell_doc));
        }
        doc["rows"].push_back(std::move(row_doc));
    }
    return doc.dump();
}

std::string render_matrix(const SatisfiabilityMatrix &matrix, const RenderOptions &options) {
    if (options.format == ReportFormat::json) {
        return json::parse(matrix_to_json(matrix)).dump(2) + "\n";
    }

    std::ostringstream out;
    std::vector<std::string> footnotes;

    const bool markdown = options.format == ReportFormat::markdown;
    if (markdown) {
        out << "| Centrality Measure | Axiom 1 | Axiom 2 | Axiom 3 | Axiom 4 | Axiom 5 | Axiom 6 |\n";
        out << "|---|---|---|---|---|---|---|\n";
    } else {
        out << "satisfiability matrix (axioms 1-6)\n";
    }
    for (const auto &row : matrix.rows) {
        if (markdown) {
            out << "| " << row.display_name << " |";
        } else {
            out << "  " << row.display_name << ":";
        }
        for (const auto &cell : row.cells) {
            footnotes.push_back(row.display_name + " / axiom " +
                                std::to_string(axiom_number(cell.axiom)) + ": " + scope_text(cell));
            const std::string marker = "[" + std::to_string(footnotes.size()) + "]";
            if (markdown) {
                out << " " << cell_symbol(cell) << " " << marker << " |";
            } else {
                out << " " << cell_symbol(cell) << marker;
            }
        }
        out << "\n";
    }
    out << "\n";
    for (std::size_t i = 0; i < footnotes.size(); ++i) {
        out << "[" << (i + 1) << "] " << footnotes[i] << "\n";
    }
    out << "\nlegend: ✓ satisfied in scope, ✓* vacuously satisfied, ✗ violated (witness attached)\n";
    return out.str();
}

std::string render_search_result(const MeasureHandle &m, AxiomId axiom,
                                 const std::optional<Witness> &witness,
                                 const SearchBudget &budget, const RenderOptions &options) {
    if (options.format == ReportFormat::json) {
        json doc;
        doc["measure"] = m.name;
        doc["axiom"] = axiom_number(axiom);
        doc["budget"] = budget_json(budget);
        doc["found"] = witness.has_value();
        if (witness) {
            doc["witness"] = witness_json(*witness);
        }
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    out << m.name << " / axiom " << axiom_number(axiom) << " (" << axiom_name(axiom) << "): ";
    if (witness) {
        out << "counterexample found\n" << render_witness_block(*witness, options);
    } else {
        out << "no counterexample within budget (";
        if (budget.mode == SearchMode::exhaustive) {
            out << "exhaustive n <= " << budget.n_max
                << (budget.dedup_isomorphic ? ", dedup" : "");
        } else {
            out << budget.random_samples << " samples, n <= " << budget.n_max << ", seed "
                << budget.seed;
        }
        out << ")\n";
    }
    return out.str();
}

std::string render_fixture_list(const std::vector<Fixture> &fixtures,
                                const RenderOptions &options) {
    if (options.format == ReportFormat::json) {
        return json::parse(fixture_manifest_json(fixtures)).dump(2) + "\n";
    }
    std::ostringstream out;
    for (const auto &f : fixtures) {
        if (options.format == ReportFormat::markdown) {
            out << "- `" << f.id << "` (n=" << f.graph.node_count() << "): " << f.description
                << "\n";
        } else {
            out << f.id << " (n=" << f.graph.node_count() << ", m=" << f.graph.edge_count()
                << "): " << f.description << "\n";
        }
    }
    return out.str();
}

std::string fixture_manifest_json(const std::vector<Fixture> &fixtures) {
    json doc;
    doc["fixtures"] = json::array();
    for (const auto &f : fixtures) {
        json item;
        item["id"] = f.id;
        item["description"] = f.description;
        item["file"] = f.id + ".edges";
        item["graph"] = graph_json(f.graph);
        if (f.added_edge) {
            item["added_edge"] = {f.added_edge->first, f.added_edge->second};
        }
        item["labels"] = json::object();
        for (const auto &[role, node] : f.labels) {
            item["labels"][role] = node;
        }
        item["expected"] = json::array();
        for (const auto &e : f.expected) {
            item["expected"].push_back({{"measure", e.measure},
                                        {"axiom", axiom_number(e.axiom)},
                                        {"status", status_name(e.status)}});
        }
        doc["fixtures"].push_back(std::move(item));
    }
    return doc.dump();
}

std::string witness_to_json(const Witness &w) { return witness_json(w).dump(); }

} // namespace centlab
