#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>

#include "wum/clustering.hpp"
#include "wum/features.hpp"

namespace wum {

// All distances are Euclidean; members are binary patterns, prototypes may
// be real-valued. Lower Cmp/Sep/Ocq is better.
struct QualityReport {
    std::size_t num_clusters = 0;
    double avg_inter = 0.0;
    double avg_intra = 0.0;
    double cmp = 0.0;
    double sep = 0.0;
    double ocq = 0.0;
    std::optional<double> rand_index;

    static std::string csv_header();  // num_clusters,avg_inter,...
    std::string csv_row() const;
    std::string to_json() const;
};

// Mean distance over all unordered prototype pairs. Throws DataError
// "inter-cluster distance undefined" with fewer than two clusters.
double avg_inter_cluster_distance(const Clustering& clustering);

// Mean over clusters of the mean member-to-prototype distance.
double avg_intra_cluster_distance(const Clustering& clustering, const PatternMatrix& matrix);

// Cmp = (1/C) Σ_c v(c)/v(X) with v(S) the RMS deviation of S's members from
// S's mean vector. Throws DataError "degenerate dataset" when v(X) = 0.
double cluster_compactness(const Clustering& clustering, const PatternMatrix& matrix);

// Sep = (2/(C(C−1))) Σ_{i<j} exp(−d(proto_i, proto_j)² / (2σ²)).
double cluster_separation(const Clustering& clustering, double sigma = 1.0);

// Ocq = β·Cmp + (1−β)·Sep.
double overall_quality(double cmp, double sep, double beta = 0.5);

// Fraction of host pairs the two partitions agree on (together/apart).
// Throws DataError when the host sets differ.
double rand_index(const std::unordered_map<std::string, int>& a,
                  const std::unordered_map<std::string, int>& b);

// Computes the full report; rand_index is filled iff the matrix carries
// ground truth.
QualityReport evaluate_quality(const Clustering& clustering, const PatternMatrix& matrix,
                               double sigma = 1.0, double beta = 0.5);

}  // namespace wum
