#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace wum {

// Common output shape across all clustering algorithms. Prototypes are
// binary (0.0/1.0) for the resonance model and real centroids for the
// baselines; either way they live in [0,1]ⁿ. Assignments use a hash map so
// that building the result stays linear in the host count; file writers sort
// before emitting.
struct Clustering {
    std::string algorithm;
    std::string params;
    std::unordered_map<std::string, int> assignments;
    std::vector<std::vector<double>> prototypes;

    std::size_t num_clusters() const { return prototypes.size(); }
};

// Cluster sizes indexed by cluster id.
std::vector<std::size_t> cluster_sizes(const Clustering& c);

// Writes `host,cluster` CSV (one header line, hosts sorted); reads it back.
// Used to pass assignments between CLI stages.
void write_assignments_file(const std::string& path, const Clustering& c);
std::unordered_map<std::string, int> read_assignments_file(const std::string& path);

}  // namespace wum
