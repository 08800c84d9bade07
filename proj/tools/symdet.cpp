// symdet: generate polynomial matrices, compute exact determinants with
// three algorithms, evaluate the cost model, and run the two benchmark
// experiments. All subcommands write to stdout unless --output is given.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symdet/bench.hpp"
#include "symdet/costmodel.hpp"
#include "symdet/csv.hpp"
#include "symdet/det.hpp"
#include "symdet/matrix.hpp"
#include "symdet/poly.hpp"
#include "symdet/rowsort.hpp"

namespace {

using namespace symdet;

// Prints to stdout or, when a path is given, atomically to that file.
void emit_csv(const std::string& output, const csv::Row& header,
              const std::vector<csv::Row>& rows) {
    if (output.empty())
        csv::write(std::cout, header, rows);
    else
        csv::write_file(output, header, rows);
}

void emit_text(const std::string& output, const std::string& text) {
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output, std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + output);
    out << text;
    if (!out.flush()) throw IoError("write failed: " + output);
}

std::vector<std::string> split_list(const std::string& csv_list) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(csv_list);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<SortStrategy> make_strategies(const std::string& keys_list,
                                          const std::string& dirs_list) {
    std::vector<RowKeyKind> keys;
    for (const std::string& name : split_list(keys_list)) {
        const auto kind = parse_key_kind(name);
        if (!kind) throw UsageError("unknown strategy: " + name);
        keys.push_back(*kind);
    }
    std::vector<SortDirection> dirs;
    for (const std::string& name : split_list(dirs_list)) {
        const auto dir = parse_direction(name);
        if (!dir) throw UsageError("unknown direction: " + name);
        dirs.push_back(*dir);
    }
    if (keys.empty() || dirs.empty())
        throw UsageError("at least one strategy and direction are required");
    std::vector<SortStrategy> out;
    for (RowKeyKind k : keys)
        for (SortDirection d : dirs) out.push_back({k, d});
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic determinants: minor expansion vs fraction-free elimination"};
    app.require_subcommand(1);

    // --- gen -----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "Generate a random polynomial matrix");
    int gen_n = 4, gen_s = 2;
    std::string gen_dist = "one-homog";
    double gen_zero_prob = 0.5;
    int gen_max_terms = 4;
    long gen_lo = -999, gen_hi = 999;
    std::uint64_t gen_seed = 0;
    std::string gen_output;
    gen->add_option("--n", gen_n, "Matrix dimension")->required();
    gen->add_option("--s", gen_s, "Variable count")->required();
    gen->add_option("--dist", gen_dist, "Distribution: one-homog or sparse-linear")
        ->check(CLI::IsMember({"one-homog", "sparse-linear"}))
        ->capture_default_str();
    gen->add_option("--zero-prob", gen_zero_prob, "Zero-entry probability (sparse-linear)")
        ->capture_default_str();
    gen->add_option("--max-terms", gen_max_terms, "Max terms per entry (sparse-linear)")
        ->capture_default_str();
    gen->add_option("--coeff-lo", gen_lo, "Coefficient range lower bound")
        ->capture_default_str();
    gen->add_option("--coeff-hi", gen_hi, "Coefficient range upper bound")
        ->capture_default_str();
    gen->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
    gen->add_option("--output", gen_output, "Output file (default: stdout)");

    // --- det -----------------------------------------------------------
    auto* det = app.add_subcommand("det", "Compute a determinant from a matrix file");
    std::string det_input, det_algorithm = "minor", det_sort = "none",
                det_direction = "asc", det_output;
    bool det_meter = false;
    det->add_option("--input", det_input, "Matrix file")->required();
    det->add_option("--algorithm", det_algorithm, "naive, minor, or bareiss")
        ->check(CLI::IsMember({"naive", "minor", "bareiss"}))
        ->capture_default_str();
    det->add_option("--sort", det_sort, "Row sort key: none, sum, sumsq, nonzero, distinct")
        ->check(CLI::IsMember({"none", "sum", "sumsq", "nonzero", "distinct"}))
        ->capture_default_str();
    det->add_option("--direction", det_direction, "Row sort direction: asc or desc")
        ->check(CLI::IsMember({"asc", "desc"}))
        ->capture_default_str();
    det->add_flag("--meter", det_meter,
                  "Report poly_mults/poly_divs/modeled_int_ops on stderr");
    det->add_option("--output", det_output, "Output file (default: stdout)");

    // --- cost ----------------------------------------------------------
    auto* cost = app.add_subcommand("cost", "Evaluate the cost model");
    int cost_n = 0, cost_s = 0, cost_guard = 16;
    std::string cost_input, cost_output;
    cost->add_option("--n", cost_n, "Matrix dimension for the closed forms");
    cost->add_option("--s", cost_s, "Variable count for the closed forms");
    cost->add_option("--input", cost_input, "Matrix file for the exact per-matrix cost");
    cost->add_option("--guard", cost_guard, "Size guard for the exact cost")
        ->capture_default_str();
    cost->add_option("--output", cost_output, "Output file (default: stdout)");

    // --- ratio-grid ----------------------------------------------------
    auto* grid = app.add_subcommand("ratio-grid", "CSV grid of log(C_M / C_G)");
    int grid_n_max = 30, grid_s_max = 30;
    std::string grid_output;
    grid->add_option("--n-max", grid_n_max, "Largest n")->capture_default_str();
    grid->add_option("--s-max", grid_s_max, "Largest s")->capture_default_str();
    grid->add_option("--output", grid_output, "Output file (default: stdout)");

    // --- bench-crossover -------------------------------------------------
    auto* cross = app.add_subcommand(
        "bench-crossover", "Timed staircase walk over (n, s), CSV output");
    StaircaseOptions cross_opt;
    double cross_min_sample_ms = 2.0;
    std::string cross_output, cross_trials_csv;
    cross->add_option("--budget", cross_opt.step_budget, "Steps to walk")
        ->capture_default_str();
    cross->add_option("--per-point", cross_opt.matrices_per_point,
                      "Matrices per point (1 = single-matrix protocol)")
        ->capture_default_str();
    cross->add_option("--ceiling-secs", cross_opt.ceiling_secs,
                      "Stop once a single run exceeds this many seconds")
        ->capture_default_str();
    cross->add_option("--seed", cross_opt.seed, "RNG seed")->capture_default_str();
    cross->add_option("--coeff-lo", cross_opt.coeff_lo, "Coefficient range lower bound")
        ->capture_default_str();
    cross->add_option("--coeff-hi", cross_opt.coeff_hi, "Coefficient range upper bound")
        ->capture_default_str();
    cross->add_option("--min-sample-ms", cross_min_sample_ms,
                      "Repeat timings until this much time accumulates")
        ->capture_default_str();
    cross->add_option("--max-reps", cross_opt.max_reps, "Repetition cap per timing")
        ->capture_default_str();
    cross->add_option("--trials-csv", cross_trials_csv,
                      "Also dump per-trial records to this CSV file");
    cross->add_option("--output", cross_output, "Output file (default: stdout)");

    // --- bench-sorting ---------------------------------------------------
    auto* sorting = app.add_subcommand(
        "bench-sorting", "Sorted vs unsorted minor expansion, CSV output");
    SortingStudyOptions sort_opt;
    std::string sort_strategies = "sum,sumsq,nonzero,distinct";
    std::string sort_directions = "asc,desc";
    std::string sort_zero_probs = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1.0";
    std::string sort_output, sort_trials_csv;
    sorting->add_option("--trials", sort_opt.trials, "Trials per grid point")
        ->capture_default_str();
    sorting->add_option("--n", sort_opt.n, "Matrix dimension")->capture_default_str();
    sorting->add_option("--s", sort_opt.s, "Variable count")->capture_default_str();
    sorting->add_option("--strategies", sort_strategies, "Comma list of sort keys")
        ->capture_default_str();
    sorting->add_option("--directions", sort_directions, "Comma list of directions")
        ->capture_default_str();
    sorting->add_option("--zero-probs", sort_zero_probs, "Comma list of zero probabilities")
        ->capture_default_str();
    sorting->add_option("--max-terms", sort_opt.max_terms, "Max terms per entry")
        ->capture_default_str();
    sorting->add_option("--coeff-lo", sort_opt.coeff_lo, "Coefficient range lower bound")
        ->capture_default_str();
    sorting->add_option("--coeff-hi", sort_opt.coeff_hi, "Coefficient range upper bound")
        ->capture_default_str();
    sorting->add_option("--seed", sort_opt.seed, "RNG seed")->capture_default_str();
    sorting->add_option("--jobs", sort_opt.jobs,
                        "Worker threads (timed sections stay serialized)")
        ->capture_default_str();
    sorting->add_option("--trials-csv", sort_trials_csv,
                        "Also dump per-trial records to this CSV file");
    sorting->add_option("--output", sort_output, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            SymMatrix matrix = [&] {
                if (gen_dist == "one-homog")
                    return gen_one_homogeneous(gen_n, gen_s, gen_lo, gen_hi, gen_seed);
                ExperimentConfig config;
                config.n = gen_n;
                config.s = gen_s;
                config.zero_prob = gen_zero_prob;
                config.max_terms = gen_max_terms;
                config.coeff_lo = gen_lo;
                config.coeff_hi = gen_hi;
                config.seed = gen_seed;
                return gen_sparse_linear(config);
            }();
            std::ostringstream text;
            write_matrix(text, matrix);
            emit_text(gen_output, text.str());
        } else if (det->parsed()) {
            const DetAlgorithm algorithm = *parse_algorithm(det_algorithm);
            if (det_meter && algorithm == DetAlgorithm::Naive)
                throw UsageError("--meter requires --algorithm minor or bareiss");
            const SymMatrix matrix = read_matrix_file(det_input);
            CostMeter meter;
            CostMeter* meter_ptr = det_meter ? &meter : nullptr;
            Polynomial result;
            if (det_sort == "none") {
                result = det_dispatch(matrix, algorithm, meter_ptr);
            } else {
                const SortStrategy strategy{*parse_key_kind(det_sort),
                                            *parse_direction(det_direction)};
                auto [sorted, perm] = sort_rows(matrix, strategy);
                result = det_dispatch(sorted, algorithm, meter_ptr);
                if (perm.sign < 0) result = -result;
            }
            emit_text(det_output, result.str() + "\n");
            if (det_meter) {
                std::cerr << "poly_mults=" << meter.poly_mults << "\n"
                          << "poly_divs=" << meter.poly_divs << "\n"
                          << "modeled_int_ops=" << meter.modeled_int_ops.get_str()
                          << "\n";
            }
        } else if (cost->parsed()) {
            const bool have_params = cost->count("--n") > 0 || cost->count("--s") > 0;
            const bool have_input = !cost_input.empty();
            if (have_params == have_input)
                throw UsageError("cost needs either --n and --s, or --input");
            std::string line;
            if (have_input) {
                const SymMatrix matrix = read_matrix_file(cost_input);
                line = "C_M_exact=" + minor_cost_exact(matrix, cost_guard).get_str() + "\n";
            } else {
                if (cost->count("--n") == 0 || cost->count("--s") == 0)
                    throw UsageError("cost needs both --n and --s");
                const CostParams params{cost_n, cost_s};
                line = "C_M=" + minor_cost_model(params).get_str() +
                       " C_G=" + gauss_cost_model(params).get_str() + "\n";
            }
            emit_text(cost_output, line);
        } else if (grid->parsed()) {
            const auto points = cost_ratio_grid(grid_n_max, grid_s_max);
            std::vector<csv::Row> rows;
            rows.reserve(points.size());
            for (const RatioPoint& p : points) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.9g", p.log_ratio);
                rows.push_back({std::to_string(p.n), std::to_string(p.s), buf});
            }
            emit_csv(grid_output, {"n", "s", "log_ratio"}, rows);
        } else if (cross->parsed()) {
            cross_opt.min_sample_ns =
                static_cast<std::uint64_t>(cross_min_sample_ms * 1e6);
            std::vector<TrialRecord> trials;
            const auto points = crossover_staircase(
                cross_opt, cross_trials_csv.empty() ? nullptr : &trials);
            emit_csv(cross_output, staircase_csv_header(), staircase_csv_rows(points));
            if (!cross_trials_csv.empty())
                csv::write_file(cross_trials_csv, trial_records_csv_header(),
                                trial_records_csv_rows(trials));
        } else if (sorting->parsed()) {
            sort_opt.strategies = make_strategies(sort_strategies, sort_directions);
            sort_opt.zero_probs.clear();
            for (const std::string& p : split_list(sort_zero_probs))
                sort_opt.zero_probs.push_back(std::stod(p));
            std::vector<TrialRecord> trials;
            const auto rows = sorting_study(
                sort_opt, sort_trials_csv.empty() ? nullptr : &trials);
            emit_csv(sort_output, sorting_csv_header(), sorting_csv_rows(rows));
            if (!sort_trials_csv.empty())
                csv::write_file(sort_trials_csv, trial_records_csv_header(),
                                trial_records_csv_rows(trials));
        }
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
