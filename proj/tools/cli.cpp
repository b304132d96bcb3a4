#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "centlab/axioms.hpp"
#include "centlab/enumeration.hpp"
#include "centlab/fixtures.hpp"
#include "centlab/measures.hpp"
#include "centlab/report.hpp"
#include "centlab/search.hpp"

namespace centlab::cli {

namespace {

constexpr std::string_view kFixturePrefix = "fixture:";

Graph load_graph(const std::string &ref) {
    if (ref.rfind(kFixturePrefix, 0) == 0) {
        return paper_fixture(std::string(ref.substr(kFixturePrefix.size()))).graph;
    }
    std::ifstream in(ref);
    if (!in) {
        throw Error("cannot open graph file '" + ref + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        return graph_from_json(text);
    }
    return parse_graph(text);
}

struct CommonOptions {
    std::string beta = "1";
    double ec_tol = 1e-12;
    std::string format = "plain";
    int decimal_digits = -1;
    std::string out_path;
    bool fail_on_violation = false;
};

void add_common(CLI::App *cmd, CommonOptions &common) {
    cmd->add_option("--beta", common.beta, "Uniform-centrality constant (rational)");
    cmd->add_option("--ec-tol", common.ec_tol, "Eigenvector power-iteration tolerance");
    cmd->add_option("--format", common.format, "Output format: plain, markdown or json")
        ->check(CLI::IsMember({"plain", "markdown", "json"}));
    cmd->add_option("--decimal", common.decimal_digits,
                    "Render exact values as decimals with this many digits");
    cmd->add_option("--out", common.out_path, "Write the report to a file instead of stdout");
}

RenderOptions render_options(const CommonOptions &common) {
    RenderOptions options;
    options.decimal_digits = common.decimal_digits;
    if (common.format == "markdown") {
        options.format = ReportFormat::markdown;
    } else if (common.format == "json") {
        options.format = ReportFormat::json;
    }
    return options;
}

std::vector<MeasureHandle> registry_for(const CommonOptions &common) {
    EigenOptions eigen;
    eigen.tolerance = common.ec_tol;
    return measure_registry(rational_from_string(common.beta), eigen);
}

std::vector<const MeasureHandle *> select_measures(const std::vector<MeasureHandle> &registry,
                                                   const std::vector<std::string> &names) {
    std::vector<const MeasureHandle *> selected;
    if (names.empty() || std::find(names.begin(), names.end(), "all") != names.end()) {
        for (const auto &m : registry) {
            selected.push_back(&m);
        }
        return selected;
    }
    for (const auto &name : names) {
        find_measure(registry, name); // throws on unknown names
    }
    for (const auto &m : registry) { // registry order keeps output deterministic
        if (std::find(names.begin(), names.end(), m.name) != names.end()) {
            selected.push_back(&m);
        }
    }
    return selected;
}

std::vector<AxiomId> select_axioms(const std::vector<std::string> &names) {
    std::vector<AxiomId> selected;
    if (names.empty() || std::find(names.begin(), names.end(), "all") != names.end()) {
        selected.assign(kAllAxioms.begin(), kAllAxioms.end());
        return selected;
    }
    for (const auto &name : names) {
        bool found = false;
        for (AxiomId a : kAllAxioms) {
            if (name == std::to_string(axiom_number(a)) || name == axiom_name(a)) {
                selected.push_back(a);
                found = true;
                break;
            }
        }
        if (!found) {
            throw InvalidArguments("unknown axiom '" + name + "' (use 1..6 or names)");
        }
    }
    return selected;
}

int resolve_jobs(int flag_value) {
    // The environment variable wins over the flag.
    if (const char *env = std::getenv("CENTRALITY_LAB_JOBS")) {
        try {
            const int jobs = std::stoi(env);
            if (jobs >= 1) {
                return jobs;
            }
        } catch (const std::exception &) {
        }
        throw InvalidParameter("CENTRALITY_LAB_JOBS must be a positive integer");
    }
    if (flag_value >= 1) {
        return flag_value;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void emit(const std::string &text, const CommonOptions &common, std::ostream &out) {
    if (common.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(common.out_path);
    if (!file) {
        throw Error("cannot write to '" + common.out_path + "'");
    }
    file << text;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"centrality measures, centrality axioms and counterexample mining"};
    app.require_subcommand(1);

    // --- compute ---
    auto *compute = app.add_subcommand("compute", "Evaluate centrality measures on a graph");
    std::string compute_graph;
    std::vector<std::string> compute_measures{"all"};
    CommonOptions compute_common;
    compute->add_option("--graph", compute_graph, "Graph file or fixture:<id>")->required();
    compute->add_option("--measure", compute_measures, "Measure names or 'all'");
    add_common(compute, compute_common);

    // --- check ---
    auto *check = app.add_subcommand("check", "Check axioms for measures on one graph");
    std::string check_graph;
    std::vector<std::string> check_measures{"all"};
    std::vector<std::string> check_axioms{"all"};
    CommonOptions check_common;
    int check_trials = 20;
    bool check_exhaustive = false;
    bool check_existential = false;
    std::uint64_t check_seed = 0;
    check->add_option("--graph", check_graph, "Graph file or fixture:<id>")->required();
    check->add_option("--measure", check_measures, "Measure names or 'all'");
    check->add_option("--axiom", check_axioms, "Axiom numbers 1..6, names, or 'all'");
    check->add_option("--a1-trials", check_trials, "Sampled permutations for axiom 1");
    check->add_flag("--a1-exhaustive", check_exhaustive, "All n! permutations (n <= 7)");
    check->add_flag("--a5-existential", check_existential,
                    "Use the weaker existential reading of axiom 5");
    check->add_option("--seed", check_seed, "Seed for sampled permutations");
    check->add_flag("--fail-on-violation", check_common.fail_on_violation,
                    "Exit 1 when a violation is found");
    add_common(check, check_common);

    // --- search ---
    auto *search = app.add_subcommand("search", "Mine counterexamples for one measure and axiom");
    std::string search_measure;
    std::string search_axiom;
    CommonOptions search_common;
    SearchBudget search_budget;
    std::string search_mode = "exhaustive";
    int search_jobs = 0;
    search->add_option("--measure", search_measure, "Measure name")->required();
    search->add_option("--axiom", search_axiom, "Axiom number 1..6 or name")->required();
    search->add_option("--n-max", search_budget.n_max, "Largest node count to scan");
    search->add_option("--mode", search_mode, "exhaustive or random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    search->add_option("--samples", search_budget.random_samples, "Random-mode sample count");
    search->add_option("--edge-prob", search_budget.edge_probability,
                       "Random-mode edge probability");
    search->add_option("--seed", search_budget.seed, "Random-mode seed");
    search->add_flag("--dedup", search_budget.dedup_isomorphic,
                     "Scan one representative per isomorphism class");
    search->add_option("--jobs", search_jobs, "Worker threads (default: all cores)");
    search->add_flag("--fail-on-violation", search_common.fail_on_violation,
                     "Exit 1 when a counterexample is found");
    add_common(search, search_common);

    // --- matrix ---
    auto *matrix = app.add_subcommand("matrix", "Build the measures-by-axioms matrix");
    CommonOptions matrix_common;
    SearchBudget matrix_budget;
    std::string matrix_mode = "exhaustive";
    int matrix_jobs = 0;
    matrix->add_option("--exhaustive-n", matrix_budget.n_max,
                       "Exhaustive sweep over all graphs up to this node count");
    matrix->add_option("--mode", matrix_mode, "exhaustive or random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    matrix->add_option("--samples", matrix_budget.random_samples, "Random-mode sample count");
    matrix->add_option("--edge-prob", matrix_budget.edge_probability,
                       "Random-mode edge probability");
    matrix->add_option("--seed", matrix_budget.seed, "Random-mode seed");
    matrix->add_flag("--dedup", matrix_budget.dedup_isomorphic,
                     "Scan one representative per isomorphism class");
    matrix->add_option("--jobs", matrix_jobs, "Worker threads (default: all cores)");
    matrix->add_flag("--fail-on-violation", matrix_common.fail_on_violation,
                     "Exit 1 when any cell is violated");
    add_common(matrix, matrix_common);

    // --- fixtures ---
    auto *fixtures = app.add_subcommand("fixtures", "List or export the fixture catalog");
    auto *fixtures_list = fixtures->add_subcommand("list", "List all fixtures");
    CommonOptions fixtures_common;
    add_common(fixtures_list, fixtures_common);
    auto *fixtures_export = fixtures->add_subcommand("export", "Write edge lists and manifest");
    std::string export_dir;
    fixtures_export->add_option("--dir", export_dir, "Target directory")->required();
    fixtures->require_subcommand(1);

    std::vector<std::string> argv_storage = args;
    std::vector<char *> argv;
    argv.push_back(const_cast<char *>("centrality-lab"));
    for (auto &arg : argv_storage) {
        argv.push_back(arg.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) {
            const Graph g = load_graph(compute_graph);
            const auto registry = registry_for(compute_common);
            std::vector<CentralityVector> vectors;
            for (const MeasureHandle *m : select_measures(registry, compute_measures)) {
                vectors.push_back(m->evaluate(g));
            }
            emit(render_centralities(g, vectors, render_options(compute_common)), compute_common,
                 out);
            return 0;
        }

        if (check->parsed()) {
            const Graph g = load_graph(check_graph);
            const auto registry = registry_for(check_common);
            CheckOptions options;
            options.isomorphism.trials = check_trials;
            options.isomorphism.exhaustive = check_exhaustive;
            options.isomorphism.seed = check_seed;
            options.diminishing.existential = check_existential;
            std::vector<AxiomVerdict> verdicts;
            for (const MeasureHandle *m : select_measures(registry, check_measures)) {
                for (AxiomId axiom : select_axioms(check_axioms)) {
                    verdicts.push_back(check_axiom(axiom, *m, g, options));
                }
            }
            emit(render_verdicts(verdicts, render_options(check_common)), check_common, out);
            const bool violated = std::any_of(verdicts.begin(), verdicts.end(), [](const auto &v) {
                return v.status == CheckStatus::violated;
            });
            return violated && check_common.fail_on_violation ? 1 : 0;
        }

        if (search->parsed()) {
            const auto registry = registry_for(search_common);
            const MeasureHandle &m = find_measure(registry, search_measure);
            const AxiomId axiom = select_axioms({search_axiom}).front();
            search_budget.mode =
                search_mode == "random" ? SearchMode::random : SearchMode::exhaustive;
            search_budget.jobs = resolve_jobs(search_jobs);
            const auto witness = find_counterexample(m, axiom, search_budget);
            emit(render_search_result(m, axiom, witness, search_budget,
                                      render_options(search_common)),
                 search_common, out);
            return witness && search_common.fail_on_violation ? 1 : 0;
        }

        if (matrix->parsed()) {
            const auto registry = registry_for(matrix_common);
            matrix_budget.mode =
                matrix_mode == "random" ? SearchMode::random : SearchMode::exhaustive;
            matrix_budget.jobs = resolve_jobs(matrix_jobs);
            CheckOptions options;
            options.isomorphism.exhaustive = true; // n! permutations at sweep sizes
            const auto result = build_satisfiability_matrix(matrix_budget, registry, options);
            emit(render_matrix(result, render_options(matrix_common)), matrix_common, out);
            const bool violated =
                std::any_of(result.rows.begin(), result.rows.end(), [](const auto &row) {
                    return std::any_of(row.cells.begin(), row.cells.end(), [](const auto &cell) {
                        return cell.status == CellStatus::violated;
                    });
                });
            return violated && matrix_common.fail_on_violation ? 1 : 0;
        }

        if (fixtures_list->parsed()) {
            emit(render_fixture_list(fixture_catalog(), render_options(fixtures_common)),
                 fixtures_common, out);
            return 0;
        }

        if (fixtures_export->parsed()) {
            std::filesystem::create_directories(export_dir);
            for (const auto &f : fixture_catalog()) {
                std::ofstream file(std::filesystem::path(export_dir) / (f.id + ".edges"));
                if (!file) {
                    throw Error("cannot write fixture file for '" + f.id + "'");
                }
                file << serialize_graph(f.graph);
            }
            std::ofstream manifest(std::filesystem::path(export_dir) / "manifest.json");
            if (!manifest) {
                throw Error("cannot write fixture manifest");
            }
            manifest << fixture_manifest_json(fixture_catalog()) << "\n";
            out << "exported " << fixture_catalog().size() << " fixtures to " << export_dir
                << "\n";
            return 0;
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace centlab::cli
