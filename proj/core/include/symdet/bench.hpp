#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symdet/csv.hpp"
#include "symdet/matrix.hpp"
#include "symdet/poly.hpp"
#include "symdet/rowsort.hpp"

namespace symdet {

std::uint64_t fnv1a64(std::string_view data);

// Hash of the canonical determinant string; used to compare algorithm
// results cheaply inside benchmark trials.
std::uint64_t result_hash(const Polynomial& p);

struct AlgoResult {
    std::string algorithm;
    std::uint64_t duration_ns = 0;
    Integer modeled_int_ops = 0;
    std::uint64_t result_hash = 0;
};

// One benchmark trial: several algorithms run on the identical matrix.
struct TrialRecord {
    std::string experiment_id;
    std::string config;  // human-readable config snapshot
    std::vector<AlgoResult> results;

    // All algorithms within one trial must agree on the determinant; throws
    // ResultMismatch otherwise.
    void check() const;
};

csv::Row trial_records_csv_header();
std::vector<csv::Row> trial_records_csv_rows(const std::vector<TrialRecord>& records);

// ---------------------------------------------------------------------------
// Crossover staircase: walk (n, s) from the start point, timing minor
// expansion against fraction-free elimination on freshly generated dense
// 1-homogeneous matrices; step n when minor expansion wins, s otherwise.

struct StaircaseOptions {
    int n_start = 1;
    int s_start = 1;
    int step_budget = 20;
    // Matrices per point; medians are taken across them. 1 = the strict
    // single-random-matrix protocol.
    int matrices_per_point = 3;
    double ceiling_secs = 60.0;  // a single run past this stops the walk
    std::uint64_t seed = 0;
    long coeff_lo = -999;
    long coeff_hi = 999;
    // Repetition control for one timing sample: repeat until this much time
    // has accumulated (or the rep cap is hit) and take the median.
    std::uint64_t min_sample_ns = 2'000'000;
    int max_reps = 501;
};

struct StaircasePoint {
    int step = 0;
    int n = 1;
    int s = 1;
    std::string winner;  // "minor", "bareiss", or "ceiling"
    std::uint64_t t_minor_ns = 0;
    std::uint64_t t_bareiss_ns = 0;
    Integer modeled_cm = 0;        // minor-expansion meter at this point
    Integer modeled_cg_meter = 0;  // elimination meter at this point
};

// Walks the staircase; per-point matrices depend only on (seed, n, s, trial
// index), not on the path taken. Trial records, when requested, receive one
// entry per (point, matrix).
std::vector<StaircasePoint> crossover_staircase(
    const StaircaseOptions& options, std::vector<TrialRecord>* trials = nullptr);

csv::Row staircase_csv_header();
std::vector<csv::Row> staircase_csv_rows(const std::vector<StaircasePoint>& points);
std::vector<StaircasePoint> staircase_from_csv(const std::vector<csv::Row>& rows);

// ---------------------------------------------------------------------------
// Sorting study: ratio of sorted to unsorted minor-expansion time (and
// modeled cost) on sparse linear matrices, per zero-probability and strategy.

struct SortingStudyOptions {
    std::vector<double> zero_probs = {0.1, 0.2, 0.3, 0.4, 0.5,
                                      0.6, 0.7, 0.8, 0.9, 1.0};
    int trials = 100;
    int n = 9;
    int s = 5;
    int max_terms = 4;
    long coeff_lo = -999;
    long coeff_hi = 999;
    std::uint64_t seed = 0;
    std::vector<SortStrategy> strategies;  // empty = all keys x directions
    int jobs = 1;
    std::uint64_t min_sample_ns = 0;  // single timed run by default
    int max_reps = 1;
};

struct SortingStudyRow {
    double zero_prob = 0.0;
    SortStrategy strategy;
    int trials = 0;
    double mean_time_ratio = 0.0;  // sorted time (incl. the sort) / unsorted
    double mean_cost_ratio = 0.0;  // sorted modeled cost / unsorted
};

std::vector<SortStrategy> all_strategies();

std::vector<SortingStudyRow> sorting_study(const SortingStudyOptions& options,
                                           std::vector<TrialRecord>* trials = nullptr);

csv::Row sorting_csv_header();
std::vector<csv::Row> sorting_csv_rows(const std::vector<SortingStudyRow>& rows);

}  // namespace symdet
