#include "wum/quality.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "wum/baselines.hpp"
#include "wum/errors.hpp"

namespace wum {

namespace {

double vec_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        d += diff * diff;
    }
    return std::sqrt(d);
}

// Cluster id per pattern, in matrix order. Enforces that the clustering and
// the matrix describe the same hosts.
std::vector<int> member_clusters(const Clustering& clustering, const PatternMatrix& matrix) {
    if (clustering.assignments.size() != matrix.m()) {
        throw DataError("assignments do not match matrix hosts");
    }
    std::vector<int> out(matrix.m());
    for (std::size_t t = 0; t < matrix.m(); ++t) {
        const auto it = clustering.assignments.find(matrix.patterns[t].host);
        if (it == clustering.assignments.end()) {
            throw DataError("assignments do not match matrix hosts");
        }
        if (it->second < 0 || static_cast<std::size_t>(it->second) >= clustering.num_clusters()) {
            throw DataError("assignment refers to unknown cluster");
        }
        out[t] = it->second;
    }
    return out;
}

// Mean vector per cluster plus the RMS deviation of members from it.
struct ClusterSpread {
    std::vector<std::size_t> sizes;
    std::vector<double> rms;
};

ClusterSpread cluster_rms(const std::vector<int>& members, const PatternMatrix& matrix,
                          std::size_t C) {
    const std::size_t n = matrix.n();
    std::vector<std::vector<double>> means(C, std::vector<double>(n, 0.0));
    std::vector<std::size_t> sizes(C, 0);
    for (std::size_t t = 0; t < matrix.m(); ++t) {
        ++sizes[members[t]];
        const auto& bits = matrix.patterns[t].bits;
        for (std::size_t i = 0; i < n; ++i) {
            if (bits.test(i)) means[members[t]][i] += 1.0;
        }
    }
    for (std::size_t c = 0; c < C; ++c) {
        if (sizes[c] == 0) continue;
        for (auto& x : means[c]) x /= static_cast<double>(sizes[c]);
    }
    std::vector<double> sq(C, 0.0);
    for (std::size_t t = 0; t < matrix.m(); ++t) {
        sq[members[t]] += squared_distance(matrix.patterns[t].bits, means[members[t]]);
    }
    ClusterSpread spread;
    spread.sizes = std::move(sizes);
    spread.rms.resize(C, 0.0);
    for (std::size_t c = 0; c < C; ++c) {
        if (spread.sizes[c] > 0) {
            spread.rms[c] = std::sqrt(sq[c] / static_cast<double>(spread.sizes[c]));
        }
    }
    return spread;
}

}  // namespace

double avg_inter_cluster_distance(const Clustering& clustering) {
    const std::size_t C = clustering.num_clusters();
    if (C < 2) throw DataError("inter-cluster distance undefined");
    double sum = 0.0;
    for (std::size_t i = 0; i < C; ++i) {
        for (std::size_t j = i + 1; j < C; ++j) {
            sum += vec_distance(clustering.prototypes[i], clustering.prototypes[j]);
        }
    }
    return sum / (static_cast<double>(C) * static_cast<double>(C - 1) / 2.0);
}

double avg_intra_cluster_distance(const Clustering& clustering, const PatternMatrix& matrix) {
    const std::size_t C = clustering.num_clusters();
    if (C == 0) throw DataError("clustering has no clusters");
    const std::vector<int> members = member_clusters(clustering, matrix);
    std::vector<double> dist_sum(C, 0.0);
    std::vector<std::size_t> sizes(C, 0);
    for (std::size_t t = 0; t < matrix.m(); ++t) {
        dist_sum[members[t]] +=
            std::sqrt(squared_distance(matrix.patterns[t].bits, clustering.prototypes[members[t]]));
        ++sizes[members[t]];
    }
    double total = 0.0;
    for (std::size_t c = 0; c < C; ++c) {
        if (sizes[c] > 0) total += dist_sum[c] / static_cast<double>(sizes[c]);
    }
    return total / static_cast<double>(C);
}

double cluster_compactness(const Clustering& clustering, const PatternMatrix& matrix) {
    const std::size_t C = clustering.num_clusters();
    if (C == 0) throw DataError("clustering has no clusters");
    const std::vector<int> members = member_clusters(clustering, matrix);

    const ClusterSpread per_cluster = cluster_rms(members, matrix, C);
    const std::vector<int> whole(matrix.m(), 0);
    const ClusterSpread global = cluster_rms(whole, matrix, 1);
    if (global.rms[0] == 0.0) throw DataError("degenerate dataset");

    double sum = 0.0;
    for (std::size_t c = 0; c < C; ++c) sum += per_cluster.rms[c] / global.rms[0];
    return sum / static_cast<double>(C);
}

double cluster_separation(const Clustering& clustering, double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
    const std::size_t C = clustering.num_clusters();
    if (C < 2) throw DataError("cluster separation undefined for fewer than two clusters");
    double sum = 0.0;
    for (std::size_t i = 0; i < C; ++i) {
        for (std::size_t j = i + 1; j < C; ++j) {
            const double d = vec_distance(clustering.prototypes[i], clustering.prototypes[j]);
            sum += std::exp(-(d * d) / (2.0 * sigma * sigma));
        }
    }
    return 2.0 * sum / (static_cast<double>(C) * static_cast<double>(C - 1));
}

double overall_quality(double cmp, double sep, double beta) {
    if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must be in [0,1]");
    return beta * cmp + (1.0 - beta) * sep;
}

double rand_index(const std::unordered_map<std::string, int>& a,
                  const std::unordered_map<std::string, int>& b) {
    if (a.size() != b.size()) throw DataError("partitions cover different host sets");
    std::vector<std::pair<int, int>> labels;
    labels.reserve(a.size());
    for (const auto& [host, ca] : a) {
        const auto it = b.find(host);
        if (it == b.end()) throw DataError("partitions cover different host sets");
        labels.emplace_back(ca, it->second);
    }
    const std::size_t m = labels.size();
    if (m < 2) return 1.0;
    std::uint64_t agree = 0, total = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const bool together_a = labels[i].first == labels[j].first;
            const bool together_b = labels[i].second == labels[j].second;
            if (together_a == together_b) ++agree;
            ++total;
        }
    }
    return static_cast<double>(agree) / static_cast<double>(total);
}

QualityReport evaluate_quality(const Clustering& clustering, const PatternMatrix& matrix,
                               double sigma, double beta) {
    QualityReport report;
    report.num_clusters = clustering.num_clusters();
    report.avg_inter = avg_inter_cluster_distance(clustering);
    report.avg_intra = avg_intra_cluster_distance(clustering, matrix);
    report.cmp = cluster_compactness(clustering, matrix);
    report.sep = cluster_separation(clustering, sigma);
    report.ocq = overall_quality(report.cmp, report.sep, beta);
    if (!matrix.ground_truth.empty()) {
        report.rand_index = rand_index(clustering.assignments, matrix.ground_truth);
    }
    return report;
}

namespace {

std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

}  // namespace

std::string QualityReport::csv_header() {
    return "num_clusters,avg_inter,avg_intra,cmp,sep,ocq,rand_index";
}

std::string QualityReport::csv_row() const {
    std::ostringstream out;
    out << num_clusters << ',' << fmt_double(avg_inter) << ',' << fmt_double(avg_intra) << ','
        << fmt_double(cmp) << ',' << fmt_double(sep) << ',' << fmt_double(ocq) << ',';
    if (rand_index) out << fmt_double(*rand_index);
    return out.str();
}

std::string QualityReport::to_json() const {
    std::ostringstream out;
    out << "{\"num_clusters\":" << num_clusters << ",\"avg_inter\":" << fmt_double(avg_inter)
        << ",\"avg_intra\":" << fmt_double(avg_intra) << ",\"cmp\":" << fmt_double(cmp)
        << ",\"sep\":" << fmt_double(sep) << ",\"ocq\":" << fmt_double(ocq) << ",\"rand_index\":";
    if (rand_index) {
        out << fmt_double(*rand_index);
    } else {
        out << "null";
    }
    out << '}';
    return out.str();
}

}  // namespace wum
