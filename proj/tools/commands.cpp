#include "commands.hpp"

#include <charconv>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "curskel/cssp.hpp"
#include "curskel/cur.hpp"
#include "curskel/errors.hpp"
#include "curskel/norms.hpp"
#include "curskel/svd.hpp"
#include "curskel/verify.hpp"
#include "matrix_io.hpp"
#include "report.hpp"

namespace curskel::cli {

namespace {

std::vector<std::size_t> parse_index_list(const std::string& text, const char* flag) {
    std::vector<std::size_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t pos = std::min(text.find(',', start), text.size());
        const std::string_view token(text.data() + start, pos - start);
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || value == 0) {
            throw std::invalid_argument(std::string(flag) + ": expected comma-separated 1-based "
                                        "indices, got '" + text + "'");
        }
        out.push_back(value);
        start = pos + 1;
    }
    return out;
}

MatrixFormat parse_format(const std::string& name) {
    if (name == "auto") return MatrixFormat::Auto;
    if (name == "csv") return MatrixFormat::Csv;
    if (name == "mtx") return MatrixFormat::MatrixMarket;
    throw std::invalid_argument("--format must be auto, csv or mtx");
}

NormKind parse_norm(const std::string& name) {
    if (name == "frobenius") return NormKind::frobenius();
    if (name == "spectral") return NormKind::spectral();
    if (name.rfind("schatten:", 0) == 0) {
        return NormKind::schatten(std::stod(name.substr(9)));
    }
    throw std::invalid_argument("--norm must be frobenius, spectral or schatten:<p>");
}

SelectionStrategy parse_strategy(const std::string& name, std::uint64_t seed) {
    if (name == "exhaustive") return SelectionStrategy::exhaustive();
    if (name == "greedy") return SelectionStrategy::greedy();
    if (name == "uniform") return SelectionStrategy::uniform(seed);
    if (name == "leverage") return SelectionStrategy::leverage(seed);
    throw std::invalid_argument("--strategy must be exhaustive, greedy, uniform or leverage");
}

json approximation_entry(const Matrix& a, const Matrix& approx) {
    json out;
    out["approx"] = to_json(approx);
    out["residual_frobenius"] = frobenius_norm(a - approx);
    out["residual_spectral"] = norm(a - approx, NormKind::spectral());
    return out;
}

void emit(const json& report, const std::string& summary) {
    std::cout << report.dump(2) << '\n';
    std::cerr << summary << '\n';
}

struct FileArgs {
    std::string path;
    std::string format = "auto";
};

void add_file_args(CLI::App* cmd, FileArgs& args) {
    cmd->add_option("file", args.path, "matrix file (.csv or .mtx)")->required();
    cmd->add_option("--format", args.format, "file format override: auto|csv|mtx")
        ->default_val("auto");
}

int cmd_decompose(const FileArgs& file, const std::string& rows, const std::string& cols,
                  const std::string& mode, double tol) {
    if (mode != "exact" && mode != "project" && mode != "both") {
        throw std::invalid_argument("--mode must be exact, project or both");
    }
    const Matrix a = load_matrix(file.path, parse_format(file.format));
    const IndexSet row_set = IndexSet::from_one_based(parse_index_list(rows, "--rows"));
    const IndexSet col_set = IndexSet::from_one_based(parse_index_list(cols, "--cols"));

    json inputs;
    inputs["file"] = file.path;
    inputs["format"] = file.format;
    inputs["rows"] = row_set.to_one_based();
    inputs["cols"] = col_set.to_one_based();
    inputs["mode"] = mode;
    inputs["tol"] = tol;

    const CurFactors f = extract(a, row_set, col_set);
    json results;
    results["c"] = to_json(f.c);
    results["u"] = to_json(f.u);
    results["r"] = to_json(f.r);
    results["rank_a"] = numerical_rank(a, tol);
    results["rank_u"] = numerical_rank(f.u, tol);

    std::string summary = "decompose:";
    if (mode != "project") {
        const CurExact exact = cur_exact(a, row_set, col_set, tol);
        results["exact"] = exact.exact;
        results["exact_cur"] = approximation_entry(a, exact.approx);
        summary += std::string(" exact residual ") +
                   std::to_string(double(results["exact_cur"]["residual_frobenius"])) +
                   (exact.exact ? " (exact)" : " (not exact)");
    } else {
        results["exact"] = numerical_rank(f.u, tol) == numerical_rank(a, tol);
    }
    if (mode != "exact") {
        const Matrix mixing = mixing_optimal(a, f, tol);
        json entry = approximation_entry(a, f.c * mixing * f.r);
        entry["mixing"] = to_json(mixing);
        results["projection"] = std::move(entry);
        summary += std::string(" projected residual ") +
                   std::to_string(double(results["projection"]["residual_frobenius"]));
    }

    emit(make_report("decompose", std::move(inputs), std::move(results)), summary);
    return kExitOk;
}

int cmd_check(const FileArgs& file, const std::string& rows, const std::string& cols, double tol) {
    const Matrix a = load_matrix(file.path, parse_format(file.format));
    const IndexSet row_set = IndexSet::from_one_based(parse_index_list(rows, "--rows"));
    const IndexSet col_set = IndexSet::from_one_based(parse_index_list(cols, "--cols"));

    json inputs;
    inputs["file"] = file.path;
    inputs["format"] = file.format;
    inputs["rows"] = row_set.to_one_based();
    inputs["cols"] = col_set.to_one_based();
    inputs["tol"] = tol;

    const CharacterizationReport rep = characterize(a, row_set, col_set, tol);
    const std::string summary =
        std::string("check: conditions [") + (rep.rank_condition ? "1" : "0") + "," +
        (rep.exact_cur ? "1" : "0") + "," + (rep.exact_projection ? "1" : "0") + "," +
        (rep.pinv_identity ? "1" : "0") + "," + (rep.rank_cr ? "1" : "0") +
        (rep.all_agree() ? "] (equivalent)" : "] (DISAGREE: implementation bug)");
    emit(make_report("check", std::move(inputs), to_json(rep)), summary);
    return kExitOk;
}

int cmd_select(const FileArgs& file, std::size_t k, const std::string& strategy_name,
               std::uint64_t seed, const std::string& axis, const std::string& norm_name) {
    if (axis != "cols" && axis != "rows") {
        throw std::invalid_argument("--axis must be cols or rows");
    }
    const Matrix a = load_matrix(file.path, parse_format(file.format));
    const SelectionStrategy strategy = parse_strategy(strategy_name, seed);
    const NormKind kind = parse_norm(norm_name);

    json inputs;
    inputs["file"] = file.path;
    inputs["format"] = file.format;
    inputs["k"] = k;
    inputs["strategy"] = strategy_name;
    inputs["seed"] = seed;
    inputs["axis"] = axis;
    inputs["norm"] = norm_name;

    const SelectionResult result = axis == "cols" ? select_columns(a, k, strategy, kind)
                                                  : select_rows(a, k, strategy, kind);
    const std::string summary = "select: " + std::to_string(result.indices.size()) + " " + axis +
                                ", frobenius error " + std::to_string(result.error_frobenius);
    emit(make_report("select", std::move(inputs),
                     to_json(result, strategy.kind == Strategy::Exhaustive)),
         summary);
    return kExitOk;
}

json sweep_inputs(const SweepConfig& cfg) {
    json inputs;
    inputs["trials"] = cfg.trials;
    inputs["max_rows"] = cfg.max_rows;
    inputs["max_cols"] = cfg.max_cols;
    inputs["max_rank"] = cfg.max_rank;
    inputs["repeat_prob"] = cfg.repeat_prob;
    inputs["tol"] = cfg.tol;
    inputs["seed"] = cfg.seed;
    return inputs;
}

int cmd_verify_sweep(const SweepConfig& cfg) {
    cfg.validate();
    const SweepReport report = equivalence_sweep(cfg);
    const std::string summary =
        "verify sweep: " + std::to_string(report.trials_run) + " trials, " +
        std::to_string(report.agreement_failures.size()) + " agreement failures, " +
        std::to_string(report.identity_failures.size()) + " identity failures";
    emit(make_report("verify.sweep", sweep_inputs(cfg), to_json(report)), summary);
    return kExitOk;
}

int cmd_verify_open_question(const SweepConfig& cfg) {
    cfg.validate();
    const OpenQuestionReport report = open_question_experiment(cfg);
    const std::string summary =
        "verify open-question: " + std::to_string(report.trials_run) + " trials, premise held " +
        std::to_string(report.premise_count) + " times, " +
        std::to_string(report.counterexamples.size()) + " counterexamples";
    emit(make_report("verify.open-question", sweep_inputs(cfg), to_json(report)), summary);
    return kExitOk;
}

}  // namespace

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const parse_error*>(&e)) return kExitParse;
    if (dynamic_cast<const svd_convergence_error*>(&e)) return kExitNumeric;
    if (dynamic_cast<const budget_exceeded_error*>(&e)) return kExitBudget;
    return kExitUsage;  // invalid_argument, out_of_range, bad flag values
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"CUR/skeleton decompositions of dense real matrices"};
    app.require_subcommand(1);

    FileArgs file;
    std::string rows, cols;
    std::string mode = "both";
    double tol = kDefaultRankTol;

    CLI::App* decompose = app.add_subcommand("decompose", "factor A into C, U, R");
    add_file_args(decompose, file);
    decompose->add_option("--rows", rows, "1-based row indices, comma separated")->required();
    decompose->add_option("--cols", cols, "1-based column indices, comma separated")->required();
    decompose->add_option("--mode", mode, "exact|project|both")->default_val("both");
    decompose->add_option("--tol", tol, "relative rank tolerance")->default_val(kDefaultRankTol);

    CLI::App* check = app.add_subcommand("check", "test the five exactness conditions");
    add_file_args(check, file);
    check->add_option("--rows", rows, "1-based row indices, comma separated")->required();
    check->add_option("--cols", cols, "1-based column indices, comma separated")->required();
    check->add_option("--tol", tol, "relative rank tolerance")->default_val(kDefaultRankTol);

    std::size_t k = 1;
    std::string strategy = "greedy";
    std::uint64_t seed = 0;
    std::string axis = "cols";
    std::string norm_name = "frobenius";

    CLI::App* select = app.add_subcommand("select", "column/row subset selection");
    add_file_args(select, file);
    select->add_option("--k", k, "number of indices to select")->required();
    select->add_option("--strategy", strategy, "exhaustive|greedy|uniform|leverage")
        ->default_val("greedy");
    select->add_option("--seed", seed, "seed for randomized strategies")->default_val(0);
    select->add_option("--axis", axis, "cols|rows")->default_val("cols");
    select->add_option("--norm", norm_name, "frobenius|spectral|schatten:<p>")
        ->default_val("frobenius");

    SweepConfig cfg;
    cfg.seed = 42;

    CLI::App* verify = app.add_subcommand("verify", "randomized experiment harness");
    verify->require_subcommand(1);
    for (const char* name : {"sweep", "open-question"}) {
        CLI::App* sub = verify->add_subcommand(
            name, std::string(name) == "sweep" ? "five-way equivalence sweep"
                                               : "probe the open converse question");
        sub->add_option("--trials", cfg.trials, "number of trials");
        sub->add_option("--max-rows", cfg.max_rows, "max sampled row count");
        sub->add_option("--max-cols", cfg.max_cols, "max sampled column count");
        sub->add_option("--max-rank", cfg.max_rank, "max planted rank");
        sub->add_option("--repeat-prob", cfg.repeat_prob, "index duplication probability");
        sub->add_option("--tol", cfg.tol, "relative tolerance for all checks");
        sub->add_option("--seed", cfg.seed, "sweep seed");
    }

    try {
        app.parse(argc, argv);
        if (decompose->parsed()) return cmd_decompose(file, rows, cols, mode, tol);
        if (check->parsed()) return cmd_check(file, rows, cols, tol);
        if (select->parsed()) return cmd_select(file, k, strategy, seed, axis, norm_name);
        if (verify->parsed()) {
            return verify->get_subcommand("sweep")->parsed() ? cmd_verify_sweep(cfg)
                                                             : cmd_verify_open_question(cfg);
        }
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
}

}  // namespace curskel::cli
