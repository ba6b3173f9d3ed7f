#include "wum/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "wum/art1.hpp"
#include "wum/baselines.hpp"
#include "wum/errors.hpp"
#include "wum/quality.hpp"
#include "wum/synth.hpp"

namespace wum {

void BenchConfig::validate() const {
    if (host_counts.empty() || rho_values.empty() || k_values.empty()) {
        throw std::invalid_argument("bench lists must be non-empty");
    }
    if (repetitions == 0) throw std::invalid_argument("repetitions must be positive");
    for (auto h : host_counts) {
        if (h == 0) throw std::invalid_argument("host counts must be positive");
    }
    for (auto rho : rho_values) {
        if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("rho must be in [0,1]");
    }
    for (auto k : k_values) {
        if (k == 0) throw std::invalid_argument("k values must be positive");
    }
    if (features == 0 || planted_k == 0 || quality_hosts == 0) {
        throw std::invalid_argument("instance shape values must be positive");
    }
    for (auto h : host_counts) {
        if (h < planted_k) throw std::invalid_argument("host counts must cover every planted cluster");
    }
    if (quality_hosts < planted_k) {
        throw std::invalid_argument("quality_hosts must cover every planted cluster");
    }
}

PatternMatrix bench_matrix(const BenchConfig& config, std::size_t hosts, double noise) {
    std::vector<std::size_t> sizes(config.planted_k, hosts / config.planted_k);
    for (std::size_t c = 0; c < hosts % config.planted_k; ++c) ++sizes[c];
    return gen_planted_sizes(config.features, sizes, config.density, noise, 0.2, config.seed);
}

std::pair<std::size_t, std::size_t> som_grid_for(std::size_t clusters) {
    std::size_t gw = 1;
    while (gw * gw < clusters) ++gw;
    const std::size_t gh = (clusters + gw - 1) / gw;
    return {gw, gh};
}

namespace {

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size();
    return m % 2 ? v[m / 2] : 0.5 * (v[m / 2 - 1] + v[m / 2]);
}

template <typename F>
TimingRow time_reps(const std::string& algorithm, std::size_t hosts, std::size_t reps, F&& run) {
    TimingRow row;
    row.algorithm = algorithm;
    row.hosts = hosts;
    for (std::size_t r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        run();
        const auto t1 = std::chrono::steady_clock::now();
        row.seconds.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    row.median_seconds = median_of(row.seconds);
    return row;
}

}  // namespace

std::vector<TimingRow> run_timing(const BenchConfig& config) {
    config.validate();
    std::vector<TimingRow> rows;
    for (const std::size_t hosts : config.host_counts) {
        const PatternMatrix matrix = bench_matrix(config, hosts, config.timing_noise);

        Art1Params ap;
        ap.rho = 0.5;
        const std::size_t budget = art1_train(matrix, ap).clustering.num_clusters();

        rows.push_back(time_reps("art1", hosts, config.repetitions,
                                 [&] { art1_train(matrix, ap); }));

        KMeansParams kp;
        kp.k = budget;
        kp.max_iters = 100;
        kp.seed = config.seed;
        rows.push_back(time_reps("kmeans", hosts, config.repetitions,
                                 [&] { kmeans_train(matrix, kp); }));

        SomParams sp;
        std::tie(sp.grid_w, sp.grid_h) = som_grid_for(budget);
        sp.iters = 10 * matrix.m();
        sp.seed = config.seed;
        rows.push_back(time_reps("som", hosts, config.repetitions,
                                 [&] { som_train(matrix, sp); }));
    }
    return rows;
}

QualityRow score_clustering(const std::string& algorithm, double param,
                            const Clustering& clustering, const PatternMatrix& matrix) {
    QualityRow row;
    row.algorithm = algorithm;
    row.param = param;
    row.clusters = clustering.num_clusters();
    row.avg_intra = avg_intra_cluster_distance(clustering, matrix);
    row.cmp = cluster_compactness(clustering, matrix);
    if (row.clusters >= 2) {
        row.avg_inter = avg_inter_cluster_distance(clustering);
        row.sep = cluster_separation(clustering);
        row.ocq = overall_quality(row.cmp, row.sep);
    } else {
        row.avg_inter = std::nan("");
        row.sep = std::nan("");
        row.ocq = std::nan("");
    }
    return row;
}

std::vector<QualityRow> run_quality_curves(const BenchConfig& config) {
    config.validate();
    const PatternMatrix matrix = bench_matrix(config, config.quality_hosts, config.noise);

    std::vector<QualityRow> rows;
    for (const double rho : config.rho_values) {
        Art1Params ap;
        ap.rho = rho;
        const auto result = art1_train(matrix, ap);
        rows.push_back(score_clustering("art1", rho, result.clustering, matrix));
    }
    for (const std::size_t k : config.k_values) {
        KMeansParams kp;
        kp.k = k;
        kp.max_iters = 100;
        kp.seed = config.seed;
        rows.push_back(score_clustering("kmeans", static_cast<double>(k),
                                 kmeans_train(matrix, kp).clustering, matrix));
    }
    for (const std::size_t k : config.k_values) {
        SomParams sp;
        std::tie(sp.grid_w, sp.grid_h) = som_grid_for(k);
        sp.iters = 10 * matrix.m();
        sp.seed = config.seed;
        rows.push_back(score_clustering("som", static_cast<double>(k), som_train(matrix, sp), matrix));
    }
    return rows;
}

std::map<std::string, ScalingFit> fit_scaling(const std::vector<TimingRow>& rows) {
    std::map<std::string, std::vector<std::pair<double, double>>> points;
    for (const auto& row : rows) {
        if (!(row.median_seconds > 0.0)) throw DataError("non-positive timing measurement");
        points[row.algorithm].emplace_back(std::log(static_cast<double>(row.hosts)),
                                           std::log(row.median_seconds));
    }
    std::map<std::string, ScalingFit> fits;
    for (const auto& [algorithm, pts] : points) {
        if (pts.size() < 3) throw DataError("scaling fit needs at least three host counts");
        double sx = 0.0, sy = 0.0;
        for (const auto& [x, y] : pts) {
            sx += x;
            sy += y;
        }
        const double mx = sx / static_cast<double>(pts.size());
        const double my = sy / static_cast<double>(pts.size());
        double sxx = 0.0, sxy = 0.0, syy = 0.0;
        for (const auto& [x, y] : pts) {
            sxx += (x - mx) * (x - mx);
            sxy += (x - mx) * (y - my);
            syy += (y - my) * (y - my);
        }
        if (sxx == 0.0) throw DataError("scaling fit needs distinct host counts");
        ScalingFit fit;
        fit.slope = sxy / sxx;
        const double ss_res = syy - fit.slope * sxy;
        fit.r2 = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
        fits[algorithm] = fit;
    }
    return fits;
}

void write_timings_csv(std::ostream& out, const std::vector<TimingRow>& rows) {
    out << "algorithm,hosts,rep,seconds\n";
    char buf[32];
    for (const auto& row : rows) {
        for (std::size_t r = 0; r < row.seconds.size(); ++r) {
            std::snprintf(buf, sizeof(buf), "%.9f", row.seconds[r]);
            out << row.algorithm << ',' << row.hosts << ',' << r << ',' << buf << '\n';
        }
    }
}

void write_quality_csv(std::ostream& out, const std::vector<QualityRow>& rows) {
    out << "algorithm,param,clusters,avg_inter,avg_intra,cmp,sep,ocq\n";
    char buf[160];
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof(buf), "%s,%g,%zu,%.6f,%.6f,%.6f,%.6f,%.6f",
                      row.algorithm.c_str(), row.param, row.clusters, row.avg_inter,
                      row.avg_intra, row.cmp, row.sep, row.ocq);
        out << buf << '\n';
    }
}

}  // namespace wum
