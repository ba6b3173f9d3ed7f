#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wum/clustering.hpp"
#include "wum/features.hpp"

namespace wum {

struct KMeansParams {
    std::size_t k = 2;
    std::size_t max_iters = 100;
    std::uint64_t seed = 0;

    void validate() const;
};

struct KMeansResult {
    Clustering clustering;
    std::vector<double> objective_history;  // sum of squared distances, per iteration
    std::size_t iterations = 0;
    bool converged = false;
};

// Lloyd iterations with Euclidean distance on the binary patterns. Centroids
// start as k distinct randomly chosen patterns; an emptied cluster is
// reseeded with the point farthest from its current centroid. Throws
// DataError when k exceeds the pattern count.
KMeansResult kmeans_train(const PatternMatrix& matrix, const KMeansParams& params);

struct SomParams {
    std::size_t grid_w = 2;
    std::size_t grid_h = 2;
    std::optional<std::size_t> iters;  // default 10 * pattern count; 0 = no training
    double initial_lr = 0.5;
    double initial_radius = 0.0;  // 0 lets the trainer pick max(grid_w, grid_h) / 2
    std::uint64_t seed = 0;

    void validate() const;
};

// Online self-organizing map on a rectangular grid. Weights start uniform in
// [0,1]ⁿ; each step pulls the best-matching unit and its Gaussian-weighted
// grid neighbors toward a random pattern, with the learning rate decaying
// exponentially and the neighborhood radius shrinking toward 1. Patterns are
// assigned to their final best-matching unit; empty units are dropped.
Clustering som_train(const PatternMatrix& matrix, const SomParams& params);

// Shared helper: squared Euclidean distance between a binary pattern and a
// real-valued vector.
double squared_distance(const BitVector& bits, const std::vector<double>& v);

}  // namespace wum
