#include "wum/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "wum/errors.hpp"
#include "wum/rng.hpp"

namespace wum {

double squared_distance(const BitVector& bits, const std::vector<double>& v) {
    double d = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double diff = (bits.test(i) ? 1.0 : 0.0) - v[i];
        d += diff * diff;
    }
    return d;
}

void KMeansParams::validate() const {
    if (k == 0) throw std::invalid_argument("k must be positive");
    if (max_iters == 0) throw std::invalid_argument("max_iters must be positive");
}

namespace {

std::size_t nearest_centroid(const BitVector& bits, const std::vector<std::vector<double>>& centroids) {
    std::size_t best = 0;
    double best_d = squared_distance(bits, centroids[0]);
    for (std::size_t j = 1; j < centroids.size(); ++j) {
        const double d = squared_distance(bits, centroids[j]);
        if (d < best_d) {
            best = j;
            best_d = d;
        }
    }
    return best;
}

Clustering compact_clusters(const std::string& algorithm, const std::string& params,
                            const PatternMatrix& matrix, const std::vector<std::size_t>& assign,
                            const std::vector<std::vector<double>>& centroids) {
    std::vector<int> remap(centroids.size(), -1);
    Clustering out;
    out.algorithm = algorithm;
    out.params = params;
    for (std::size_t t = 0; t < assign.size(); ++t) {
        if (remap[assign[t]] < 0) {
            remap[assign[t]] = static_cast<int>(out.prototypes.size());
            out.prototypes.push_back(centroids[assign[t]]);
        }
        out.assignments[matrix.patterns[t].host] = remap[assign[t]];
    }
    return out;
}

}  // namespace

KMeansResult kmeans_train(const PatternMatrix& matrix, const KMeansParams& params) {
    params.validate();
    const std::size_t N = matrix.m();
    const std::size_t n = matrix.n();
    if (params.k > N) throw DataError("k exceeds number of patterns");

    Rng rng(params.seed);

    // Seed centroids with k distinct patterns (partial Fisher-Yates).
    std::vector<std::size_t> idx(N);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::vector<double>> centroids;
    centroids.reserve(params.k);
    for (std::size_t j = 0; j < params.k; ++j) {
        const std::size_t pick = j + rng.below(N - j);
        std::swap(idx[j], idx[pick]);
        centroids.push_back(matrix.patterns[idx[j]].bits.to_doubles());
    }

    KMeansResult result;
    std::vector<std::size_t> assign(N, params.k);
    std::vector<std::size_t> prev(N, params.k + 1);
    for (std::size_t iter = 0; iter < params.max_iters; ++iter) {
        double objective = 0.0;
        for (std::size_t t = 0; t < N; ++t) {
            assign[t] = nearest_centroid(matrix.patterns[t].bits, centroids);
            objective += squared_distance(matrix.patterns[t].bits, centroids[assign[t]]);
        }
        result.objective_history.push_back(objective);
        result.iterations = iter + 1;
        if (assign == prev) {
            result.converged = true;
            break;
        }
        prev = assign;

        std::vector<std::vector<double>> sums(params.k, std::vector<double>(n, 0.0));
        std::vector<std::size_t> sizes(params.k, 0);
        for (std::size_t t = 0; t < N; ++t) {
            ++sizes[assign[t]];
            const auto& bits = matrix.patterns[t].bits;
            for (std::size_t i = 0; i < n; ++i) {
                if (bits.test(i)) sums[assign[t]][i] += 1.0;
            }
        }
        for (std::size_t j = 0; j < params.k; ++j) {
            if (sizes[j] == 0) continue;
            for (std::size_t i = 0; i < n; ++i) centroids[j][i] = sums[j][i] / static_cast<double>(sizes[j]);
        }

        // An emptied cluster steals the point farthest from its own centroid;
        // identical points everywhere (max distance 0) leave it empty.
        std::vector<char> taken(N, 0);
        for (std::size_t j = 0; j < params.k; ++j) {
            if (sizes[j] != 0) continue;
            std::size_t far_t = N;
            double far_d = 0.0;
            for (std::size_t t = 0; t < N; ++t) {
                if (taken[t]) continue;
                const double d = squared_distance(matrix.patterns[t].bits, centroids[assign[t]]);
                if (d > far_d) {
                    far_d = d;
                    far_t = t;
                }
            }
            if (far_t == N) continue;
            taken[far_t] = 1;
            centroids[j] = matrix.patterns[far_t].bits.to_doubles();
        }
    }

    std::ostringstream ps;
    ps << "k=" << params.k << " seed=" << params.seed;
    result.clustering = compact_clusters("kmeans", ps.str(), matrix, assign, centroids);
    return result;
}

void SomParams::validate() const {
    if (grid_w == 0 || grid_h == 0) throw std::invalid_argument("grid dimensions must be positive");
    if (!(initial_lr > 0.0 && initial_lr <= 1.0)) {
        throw std::invalid_argument("initial_lr must be in (0,1]");
    }
    if (initial_radius < 0.0) throw std::invalid_argument("initial_radius must be positive");
}

Clustering som_train(const PatternMatrix& matrix, const SomParams& params) {
    params.validate();
    const std::size_t N = matrix.m();
    const std::size_t n = matrix.n();
    const std::size_t k = params.grid_w * params.grid_h;
    const std::size_t iters = params.iters.value_or(10 * N);
    const double r0 = params.initial_radius > 0.0
                          ? params.initial_radius
                          : static_cast<double>(std::max(params.grid_w, params.grid_h)) / 2.0;

    Rng rng(params.seed);
    std::vector<std::vector<double>> weights(k, std::vector<double>(n));
    for (auto& w : weights) {
        for (auto& x : w) x = rng.uniform();
    }

    // Radius decays from r0 down to 1 over the run; learning rate decays with
    // time constant iters. Both follow the usual online-SOM schedules.
    const double lambda = iters > 0 ? std::log(std::max(r0, 1.0)) / static_cast<double>(iters) : 0.0;
    for (std::size_t t = 0; t < iters; ++t) {
        const auto& bits = matrix.patterns[rng.below(N)].bits;
        const std::size_t bmu = nearest_centroid(bits, weights);
        const double sigma = r0 * std::exp(-lambda * static_cast<double>(t));
        const double lr = params.initial_lr *
                          std::exp(-static_cast<double>(t) / static_cast<double>(iters));
        const double bx = static_cast<double>(bmu % params.grid_w);
        const double by = static_cast<double>(bmu / params.grid_w);
        for (std::size_t u = 0; u < k; ++u) {
            const double dx = static_cast<double>(u % params.grid_w) - bx;
            const double dy = static_cast<double>(u / params.grid_w) - by;
            const double h = std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
            const double a = lr * h;
            auto& w = weights[u];
            for (std::size_t i = 0; i < n; ++i) {
                w[i] += a * ((bits.test(i) ? 1.0 : 0.0) - w[i]);
            }
        }
    }

    std::vector<std::size_t> assign(N);
    for (std::size_t t = 0; t < N; ++t) {
        assign[t] = nearest_centroid(matrix.patterns[t].bits, weights);
    }

    std::ostringstream ps;
    ps << "grid=" << params.grid_w << 'x' << params.grid_h << " iters=" << iters
       << " seed=" << params.seed;
    return compact_clusters("som", ps.str(), matrix, assign, weights);
}

}  // namespace wum
