#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wum/features.hpp"

namespace wum {

// Planted-cluster generator: k random prototypes with bounded pairwise
// Jaccard overlap, then per_cluster members each, derived by independent bit
// flips at the noise rate. Hosts are labeled h00000, h00001, … in cluster
// order; ground truth is recorded on the matrix.
struct PlantedParams {
    std::size_t n = 64;
    std::size_t k = 5;
    std::size_t per_cluster = 40;
    double density = 0.25;
    double noise = 0.0;
    double max_overlap = 0.2;
    std::uint64_t seed = 0;

    void validate() const;
};

PatternMatrix gen_planted(const PlantedParams& params);

// Same planting with explicit cluster sizes (hosts need not divide evenly).
PatternMatrix gen_planted_sizes(std::size_t n, const std::vector<std::size_t>& sizes,
                                double density, double noise, double max_overlap,
                                std::uint64_t seed);

// Synthetic access log realizing a planted matrix: 1–3 GET lines per set
// bit, valid Common Log Format throughout, line order shuffled. `expected`
// is what ingestion at tau=1 recovers: the planted matrix minus any URL
// column no host touches.
struct LogGenParams {
    std::size_t hosts = 100;
    std::size_t urls = 50;
    std::size_t k = 5;
    double density = 0.25;
    double noise = 0.0;
    double max_overlap = 0.2;
    std::uint64_t seed = 0;

    void validate() const;
};

struct GeneratedLog {
    std::string text;
    PatternMatrix expected;
};

GeneratedLog gen_log(const LogGenParams& params);

}  // namespace wum
