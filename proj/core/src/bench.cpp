#include "symdet/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <thread>
#include <utility>

#include "symdet/det.hpp"
#include "symdet/rng.hpp"

namespace symdet {

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t result_hash(const Polynomial& p) { return fnv1a64(p.str()); }

void TrialRecord::check() const {
    if (results.empty()) return;
    for (const AlgoResult& r : results) {
        if (r.result_hash != results.front().result_hash)
            throw ResultMismatch("algorithms disagree in trial [" + experiment_id +
                                 "; " + config + "]: " + results.front().algorithm +
                                 " vs " + r.algorithm);
    }
}

csv::Row trial_records_csv_header() {
    return {"experiment", "config", "algorithm", "duration_ns",
            "modeled_int_ops", "result_hash"};
}

std::vector<csv::Row> trial_records_csv_rows(const std::vector<TrialRecord>& records) {
    std::vector<csv::Row> rows;
    for (const TrialRecord& rec : records)
        for (const AlgoResult& r : rec.results)
            rows.push_back({rec.experiment_id, rec.config, r.algorithm,
                            std::to_string(r.duration_ns),
                            r.modeled_int_ops.get_str(),
                            std::to_string(r.result_hash)});
    return rows;
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ns(Clock::time_point begin, Clock::time_point end) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(end - begin).count());
}

struct TimingPolicy {
    std::uint64_t min_sample_ns = 0;
    int max_reps = 1;
};

// Repeats `body` until min_sample_ns of wall clock has accumulated (or the
// rep cap is reached) and reports the median single-run duration. Small
// inputs finish in microseconds, where one-shot timings are dominated by
// noise; the median over many repetitions makes comparisons repeatable.
template <class F>
std::uint64_t time_median_ns(F&& body, TimingPolicy policy) {
    std::vector<std::uint64_t> samples;
    std::uint64_t total = 0;
    const int cap = std::max(1, policy.max_reps);
    do {
        const auto begin = Clock::now();
        body();
        const auto end = Clock::now();
        const std::uint64_t d = elapsed_ns(begin, end);
        samples.push_back(d);
        total += d;
    } while (total < policy.min_sample_ns &&
             static_cast<int>(samples.size()) < cap);
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

std::string format_double(double v, const char* spec = "%.9g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::uint64_t median_of(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

}  // namespace

std::vector<StaircasePoint> crossover_staircase(const StaircaseOptions& options,
                                                std::vector<TrialRecord>* trials) {
    if (options.step_budget < 1) throw InvalidRange("step budget must be >= 1");
    if (options.matrices_per_point < 1)
        throw InvalidRange("matrices per point must be >= 1");
    if (options.n_start < 1 || options.s_start < 1)
        throw InvalidRange("staircase start must have n, s >= 1");
    if (options.ceiling_secs <= 0) throw InvalidRange("ceiling must be positive");

    const auto ceiling_ns =
        static_cast<std::uint64_t>(options.ceiling_secs * 1e9);
    const TimingPolicy policy{options.min_sample_ns, options.max_reps};

    std::vector<StaircasePoint> points;
    int n = options.n_start;
    int s = options.s_start;

    for (int step = 1; step <= options.step_budget; ++step) {
        StaircasePoint pt;
        pt.step = step;
        pt.n = n;
        pt.s = s;

        std::vector<std::uint64_t> minor_medians, bareiss_medians;
        bool ceiling_hit = false;

        for (int t = 0; t < options.matrices_per_point && !ceiling_hit; ++t) {
            // Matrices depend only on (seed, n, s, t), never on the path, so
            // any two runs that visit a point see identical matrices.
            const std::uint64_t mseed = derive_seed(
                options.seed,
                (static_cast<std::uint64_t>(n) << 20) | static_cast<std::uint64_t>(s),
                static_cast<std::uint64_t>(t));
            const SymMatrix matrix = gen_one_homogeneous(
                n, s, options.coeff_lo, options.coeff_hi, mseed);

            // Instrumented pass: provides the meters, the results for the
            // consistency check, and the warm-up; also our chance to notice
            // the ceiling before committing to timing repetitions.
            CostMeter minor_meter, bareiss_meter;
            auto begin = Clock::now();
            const Polynomial d_minor = minor_expansion(matrix, &minor_meter);
            std::uint64_t t_minor = elapsed_ns(begin, Clock::now());

            begin = Clock::now();
            const Polynomial d_bareiss = bareiss(matrix, &bareiss_meter);
            std::uint64_t t_bareiss = elapsed_ns(begin, Clock::now());

            if (t_minor > ceiling_ns || t_bareiss > ceiling_ns) {
                ceiling_hit = true;
            } else {
                t_minor = time_median_ns([&] { minor_expansion(matrix); }, policy);
                t_bareiss = time_median_ns([&] { bareiss(matrix); }, policy);
                if (t_minor > ceiling_ns || t_bareiss > ceiling_ns) ceiling_hit = true;
            }

            TrialRecord rec;
            rec.experiment_id = "crossover";
            rec.config = "n=" + std::to_string(n) + " s=" + std::to_string(s) +
                         " matrix=" + std::to_string(t) +
                         " coeff=[" + std::to_string(options.coeff_lo) + "," +
                         std::to_string(options.coeff_hi) + "]" +
                         " seed=" + std::to_string(mseed);
            rec.results.push_back({"minor", t_minor, minor_meter.modeled_int_ops,
                                   result_hash(d_minor)});
            rec.results.push_back({"bareiss", t_bareiss, bareiss_meter.modeled_int_ops,
                                   result_hash(d_bareiss)});
            rec.check();
            if (trials) trials->push_back(rec);

            minor_medians.push_back(t_minor);
            bareiss_medians.push_back(t_bareiss);
            if (t == 0) {
                pt.modeled_cm = minor_meter.modeled_int_ops;
                pt.modeled_cg_meter = bareiss_meter.modeled_int_ops;
            }
        }

        pt.t_minor_ns = median_of(minor_medians);
        pt.t_bareiss_ns = median_of(bareiss_medians);

        if (ceiling_hit) {
            pt.winner = "ceiling";
            points.push_back(std::move(pt));
            break;
        }
        if (pt.t_minor_ns < pt.t_bareiss_ns) {
            pt.winner = "minor";
            ++n;
        } else {
            pt.winner = "bareiss";
            ++s;
        }
        points.push_back(std::move(pt));
    }
    return points;
}

csv::Row staircase_csv_header() {
    return {"step", "n", "s", "winner", "t_minor_ns", "t_bareiss_ns",
            "modeled_cm", "modeled_cg_meter"};
}

std::vector<csv::Row> staircase_csv_rows(const std::vector<StaircasePoint>& points) {
    std::vector<csv::Row> rows;
    rows.reserve(points.size());
    for (const StaircasePoint& p : points)
        rows.push_back({std::to_string(p.step), std::to_string(p.n),
                        std::to_string(p.s), p.winner,
                        std::to_string(p.t_minor_ns), std::to_string(p.t_bareiss_ns),
                        p.modeled_cm.get_str(), p.modeled_cg_meter.get_str()});
    return rows;
}

std::vector<StaircasePoint> staircase_from_csv(const std::vector<csv::Row>& rows) {
    if (rows.empty() || rows.front() != staircase_csv_header())
        throw SyntaxError("not a staircase CSV: bad header", 0);
    std::vector<StaircasePoint> points;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const csv::Row& r = rows[i];
        if (r.size() != 8)
            throw SyntaxError("staircase row has wrong field count", i);
        StaircasePoint p;
        p.step = std::stoi(r[0]);
        p.n = std::stoi(r[1]);
        p.s = std::stoi(r[2]);
        p.winner = r[3];
        p.t_minor_ns = std::stoull(r[4]);
        p.t_bareiss_ns = std::stoull(r[5]);
        p.modeled_cm = Integer(r[6], 10);
        p.modeled_cg_meter = Integer(r[7], 10);
        points.push_back(std::move(p));
    }
    return points;
}

std::vector<SortStrategy> all_strategies() {
    std::vector<SortStrategy> out;
    for (RowKeyKind key : {RowKeyKind::SumTerms, RowKeyKind::SumSquaredTerms,
                           RowKeyKind::NonzeroCount, RowKeyKind::DistinctMonomials})
        for (SortDirection dir : {SortDirection::Ascending, SortDirection::Descending})
            out.push_back({key, dir});
    return out;
}

std::vector<SortingStudyRow> sorting_study(const SortingStudyOptions& options,
                                           std::vector<TrialRecord>* trials) {
    if (options.trials < 1) throw InvalidRange("trials must be >= 1");
    if (options.zero_probs.empty())
        throw InvalidRange("at least one zero probability is required");
    const std::vector<SortStrategy> strategies =
        options.strategies.empty() ? all_strategies() : options.strategies;
    const TimingPolicy policy{options.min_sample_ns, options.max_reps};

    const std::size_t n_probs = options.zero_probs.size();
    const std::size_t n_strats = strategies.size();
    const std::size_t n_trials = static_cast<std::size_t>(options.trials);

    // ratio[pi][k][t]
    auto slot = [=](std::size_t pi, std::size_t k, std::size_t t) {
        return (pi * n_strats + k) * n_trials + t;
    };
    std::vector<double> time_ratios(n_probs * n_strats * n_trials, 0.0);
    std::vector<double> cost_ratios(n_probs * n_strats * n_trials, 0.0);
    std::vector<TrialRecord> records(n_probs * n_trials);

    std::mutex timing_mutex;  // timed sections never overlap
    std::atomic<std::size_t> next_task{0};
    const std::size_t total_tasks = n_probs * n_trials;

    auto run_trial = [&](std::size_t pi, std::size_t t) {
        const double p = options.zero_probs[pi];
        ExperimentConfig config;
        config.n = options.n;
        config.s = options.s;
        config.zero_prob = p;
        config.max_terms = options.max_terms;
        config.coeff_lo = options.coeff_lo;
        config.coeff_hi = options.coeff_hi;
        config.seed = derive_seed(options.seed, pi, t);
        const SymMatrix matrix = gen_sparse_linear(config);

        CostMeter unsorted_meter;
        const Polynomial baseline = minor_expansion(matrix, &unsorted_meter);

        TrialRecord rec;
        rec.experiment_id = "sorting";
        rec.config = "n=" + std::to_string(options.n) +
                     " s=" + std::to_string(options.s) +
                     " zero_prob=" + format_double(p, "%g") +
                     " max_terms=" + std::to_string(options.max_terms) +
                     " coeff=[" + std::to_string(options.coeff_lo) + "," +
                     std::to_string(options.coeff_hi) + "]" +
                     " seed=" + std::to_string(config.seed);

        std::uint64_t t_unsorted;
        {
            std::lock_guard<std::mutex> lock(timing_mutex);
            t_unsorted = time_median_ns([&] { minor_expansion(matrix); }, policy);
        }
        rec.results.push_back({"unsorted", t_unsorted, unsorted_meter.modeled_int_ops,
                               result_hash(baseline)});

        for (std::size_t k = 0; k < n_strats; ++k) {
            const SortStrategy strategy = strategies[k];
            CostMeter meter;
            const Polynomial sorted_det =
                sorted_minor_expansion(matrix, strategy, &meter);
            std::uint64_t t_sorted;
            {
                // The timed sorted path includes the sort itself.
                std::lock_guard<std::mutex> lock(timing_mutex);
                t_sorted = time_median_ns(
                    [&] { sorted_minor_expansion(matrix, strategy); }, policy);
            }
            const std::string name = std::string(key_kind_name(strategy.key)) + "/" +
                                     std::string(direction_name(strategy.direction));
            rec.results.push_back({name, t_sorted, meter.modeled_int_ops,
                                   result_hash(sorted_det)});

            time_ratios[slot(pi, k, t)] =
                static_cast<double>(t_sorted) /
                static_cast<double>(std::max<std::uint64_t>(t_unsorted, 1));
            if (unsorted_meter.modeled_int_ops == 0 && meter.modeled_int_ops == 0) {
                cost_ratios[slot(pi, k, t)] = 1.0;
            } else {
                const Integer denom = unsorted_meter.modeled_int_ops == 0
                                          ? Integer(1)
                                          : unsorted_meter.modeled_int_ops;
                mpq_class ratio(meter.modeled_int_ops, denom);
                ratio.canonicalize();
                cost_ratios[slot(pi, k, t)] = ratio.get_d();
            }
        }
        rec.check();
        records[pi * n_trials + t] = std::move(rec);
    };

    const int jobs = std::clamp(options.jobs, 1,
                                static_cast<int>(std::thread::hardware_concurrency() > 0
                                                     ? std::thread::hardware_concurrency()
                                                     : 1));
    if (jobs <= 1) {
        for (std::size_t task = 0; task < total_tasks; ++task)
            run_trial(task / n_trials, task % n_trials);
    } else {
        std::vector<std::thread> pool;
        std::exception_ptr failure;
        std::mutex failure_mutex;
        for (int w = 0; w < jobs; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t task = next_task.fetch_add(1);
                    if (task >= total_tasks) return;
                    try {
                        run_trial(task / n_trials, task % n_trials);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        return;
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    if (trials)
        trials->insert(trials->end(), records.begin(), records.end());

    std::vector<SortingStudyRow> rows;
    rows.reserve(n_probs * n_strats);
    for (std::size_t pi = 0; pi < n_probs; ++pi) {
        for (std::size_t k = 0; k < n_strats; ++k) {
            SortingStudyRow row;
            row.zero_prob = options.zero_probs[pi];
            row.strategy = strategies[k];
            row.trials = options.trials;
            double time_sum = 0.0, cost_sum = 0.0;
            for (std::size_t t = 0; t < n_trials; ++t) {
                time_sum += time_ratios[slot(pi, k, t)];
                cost_sum += cost_ratios[slot(pi, k, t)];
            }
            row.mean_time_ratio = time_sum / static_cast<double>(n_trials);
            row.mean_cost_ratio = cost_sum / static_cast<double>(n_trials);
            rows.push_back(row);
        }
    }
    return rows;
}

csv::Row sorting_csv_header() {
    return {"zero_prob", "strategy", "direction", "trials",
            "mean_time_ratio", "mean_cost_ratio"};
}

std::vector<csv::Row> sorting_csv_rows(const std::vector<SortingStudyRow>& rows) {
    std::vector<csv::Row> out;
    out.reserve(rows.size());
    for (const SortingStudyRow& r : rows)
        out.push_back({format_double(r.zero_prob, "%g"),
                       std::string(key_kind_name(r.strategy.key)),
                       std::string(direction_name(r.strategy.direction)),
                       std::to_string(r.trials),
                       format_double(r.mean_time_ratio),
                       format_double(r.mean_cost_ratio)});
    return out;
}

}  // namespace symdet
