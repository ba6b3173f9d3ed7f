#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "wum/clustering.hpp"
#include "wum/features.hpp"

namespace wum {

// Pinned experiment shapes. Timing and quality runs each generate their own
// planted instances from these fields; only ordering and trends are
// comparable across machines, never absolute seconds.
struct BenchConfig {
    std::vector<std::size_t> host_counts = {100, 250, 500, 1000};
    std::vector<double> rho_values = {0.30, 0.35, 0.40, 0.45, 0.50};
    std::vector<std::size_t> k_values = {2, 4, 6, 8, 10, 12};
    std::size_t repetitions = 5;
    std::uint64_t seed = 7;

    std::size_t features = 128;
    std::size_t planted_k = 5;
    double density = 0.25;
    double noise = 0.0;          // quality-curve instance
    double timing_noise = 0.0;   // timing instances
    std::size_t quality_hosts = 500;

    void validate() const;
};

struct TimingRow {
    std::string algorithm;
    std::size_t hosts = 0;
    std::vector<double> seconds;  // one entry per repetition
    double median_seconds = 0.0;
};

struct QualityRow {
    std::string algorithm;
    double param = 0.0;  // rho for art1, k for the baselines
    std::size_t clusters = 0;
    double avg_inter = 0.0;
    double avg_intra = 0.0;
    double cmp = 0.0;
    double sep = 0.0;
    double ocq = 0.0;
};

struct ScalingFit {
    double slope = 0.0;
    double r2 = 0.0;
};

// For each host count: plant one matrix, train each algorithm with matched
// cluster budgets (baselines get the cluster count the vigilance-0.5 run
// produced), wall-clocking train() only, repetitions times each.
std::vector<TimingRow> run_timing(const BenchConfig& config);

// One pinned matrix; a vigilance sweep for ART1 and a k sweep for the
// baselines, all scored with the quality metrics. Single-cluster rows carry
// NaN for the pairwise measures instead of failing the sweep.
std::vector<QualityRow> run_quality_curves(const BenchConfig& config);

// Least-squares slope of log(median seconds) vs log(hosts) per algorithm,
// with R². Needs at least three host counts.
std::map<std::string, ScalingFit> fit_scaling(const std::vector<TimingRow>& rows);

// Scores one clustering into a sweep row; pairwise measures are NaN for a
// single cluster.
QualityRow score_clustering(const std::string& algorithm, double param,
                            const Clustering& clustering, const PatternMatrix& matrix);

// timings.csv: algorithm,hosts,rep,seconds (one line per repetition).
void write_timings_csv(std::ostream& out, const std::vector<TimingRow>& rows);
// quality.csv: algorithm,param,clusters,avg_inter,avg_intra,cmp,sep,ocq.
void write_quality_csv(std::ostream& out, const std::vector<QualityRow>& rows);

// The planted instance a config pins for a given host count (used by both
// run_timing and external callers that need the identical matrix).
PatternMatrix bench_matrix(const BenchConfig& config, std::size_t hosts, double noise);

// Grid just large enough for `clusters` units: ceil(sqrt) by ceil-divide.
std::pair<std::size_t, std::size_t> som_grid_for(std::size_t clusters);

}  // namespace wum
