// Command-line front end for the host-clustering pipeline:
// log ingestion, clustering, quality evaluation, benchmarks, sweeps, and
// synthetic data generation.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wum/art1.hpp"
#include "wum/baselines.hpp"
#include "wum/bench.hpp"
#include "wum/errors.hpp"
#include "wum/features.hpp"
#include "wum/logparse.hpp"
#include "wum/quality.hpp"
#include "wum/synth.hpp"

namespace {

using nlohmann::json;

std::string fmt3(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", x);
    return buf;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw wum::DataError("cannot open for writing: " + path);
    out << text;
    if (!out) throw wum::DataError("write failed: " + path);
}

void print_prototypes(const wum::Clustering& clustering, bool binary) {
    const auto sizes = wum::cluster_sizes(clustering);
    for (std::size_t c = 0; c < clustering.prototypes.size(); ++c) {
        std::cout << "cluster " << c << " (" << sizes[c] << " hosts): ";
        if (binary) {
            std::string bits(clustering.prototypes[c].size(), '0');
            for (std::size_t i = 0; i < bits.size(); ++i) {
                if (clustering.prototypes[c][i] != 0.0) bits[i] = '1';
            }
            std::cout << bits;
        } else {
            std::cout << '[';
            for (std::size_t i = 0; i < clustering.prototypes[c].size(); ++i) {
                if (i) std::cout << ' ';
                std::cout << fmt3(clustering.prototypes[c][i]);
            }
            std::cout << ']';
        }
        std::cout << '\n';
    }
}

json clustering_json(const wum::Clustering& clustering) {
    json j;
    j["algorithm"] = clustering.algorithm;
    j["params"] = clustering.params;
    j["num_clusters"] = clustering.num_clusters();
    j["cluster_sizes"] = wum::cluster_sizes(clustering);
    j["prototypes"] = clustering.prototypes;
    return j;
}

// ---- preprocess ----------------------------------------------------------

struct PreprocessArgs {
    std::string log_path;
    std::string out_path;
    std::uint64_t tau = 1;
    std::size_t min_url_support = 1;
    int status_max = 399;
    std::vector<std::string> methods = {"GET"};
    std::vector<std::string> ext_blocklist;
    bool json_out = false;
};

int run_preprocess(const PreprocessArgs& args) {
    std::ifstream in(args.log_path);
    if (!in) throw wum::DataError("cannot open: " + args.log_path);

    wum::ParseStats stats;
    std::vector<wum::LogRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        ++stats.lines;
        if (auto rec = wum::parse_log_line(line)) {
            ++stats.parsed;
            records.push_back(std::move(*rec));
        } else {
            ++stats.skipped;
        }
    }

    wum::RecordFilter filter;
    filter.methods = args.methods;
    filter.max_status = args.status_max;
    filter.blocked_extensions = args.ext_blocklist;

    const wum::AccessCounts counts = wum::aggregate(records, filter);
    const wum::BaseVector base = wum::build_base_vector(counts, args.min_url_support);
    std::vector<std::string> dropped;
    const wum::PatternMatrix matrix = wum::binarize(counts, base, args.tau, &dropped);
    wum::write_matrix_file(args.out_path, matrix);

    std::cerr << "lines read: " << stats.lines << ", parsed: " << stats.parsed
              << ", skipped: " << stats.skipped << '\n';
    for (const auto& host : dropped) std::cerr << "dropped all-zero host: " << host << '\n';

    if (args.json_out) {
        json j;
        j["lines"] = stats.lines;
        j["parsed"] = stats.parsed;
        j["skipped"] = stats.skipped;
        j["hosts"] = matrix.m();
        j["features"] = matrix.n();
        j["dropped_hosts"] = dropped;
        j["out"] = args.out_path;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "wrote " << args.out_path << ": " << matrix.m() << " hosts x " << matrix.n()
                  << " features\n";
    }
    return 0;
}

// ---- cluster -------------------------------------------------------------

struct ClusterArgs {
    std::string matrix_path;
    std::string algo;
    double rho = 0.5;
    std::size_t max_epochs = 100;
    std::size_t max_clusters = 0;
    std::size_t k = 0;
    bool k_given = false;
    std::string grid = "2x2";
    std::int64_t iters = -1;
    double lr = 0.5;
    double radius = 0.0;
    std::uint64_t seed = 0;
    std::string model_out;
    std::string assignments_out;
    bool json_out = false;
};

std::pair<std::size_t, std::size_t> parse_grid(const std::string& grid) {
    const std::size_t x = grid.find('x');
    if (x == std::string::npos || x == 0 || x + 1 >= grid.size()) {
        throw std::invalid_argument("--grid expects WxH, e.g. 2x2");
    }
    try {
        const long w = std::stol(grid.substr(0, x));
        const long h = std::stol(grid.substr(x + 1));
        if (w <= 0 || h <= 0) throw std::invalid_argument("");
        return {static_cast<std::size_t>(w), static_cast<std::size_t>(h)};
    } catch (const std::exception&) {
        throw std::invalid_argument("--grid expects WxH with positive integers");
    }
}

int run_cluster(const ClusterArgs& args) {
    const wum::PatternMatrix matrix = wum::read_matrix_file(args.matrix_path);
    wum::Clustering clustering;
    bool binary_prototypes = false;

    if (args.algo == "art1") {
        wum::Art1Params params;
        params.rho = args.rho;
        params.max_epochs = args.max_epochs;
        params.max_clusters = args.max_clusters;
        auto result = wum::art1_train(matrix, params);
        clustering = std::move(result.clustering);
        binary_prototypes = true;
        if (!args.model_out.empty()) result.model.save(args.model_out);
    } else if (args.algo == "kmeans") {
        if (!args.k_given) throw std::invalid_argument("--algo kmeans requires --k");
        if (!args.model_out.empty()) {
            throw std::invalid_argument("--out model files are only produced by --algo art1");
        }
        wum::KMeansParams params;
        params.k = args.k;
        params.seed = args.seed;
        clustering = wum::kmeans_train(matrix, params).clustering;
    } else if (args.algo == "som") {
        if (!args.model_out.empty()) {
            throw std::invalid_argument("--out model files are only produced by --algo art1");
        }
        wum::SomParams params;
        std::tie(params.grid_w, params.grid_h) = parse_grid(args.grid);
        if (args.iters >= 0) params.iters = static_cast<std::size_t>(args.iters);
        params.initial_lr = args.lr;
        params.initial_radius = args.radius;
        params.seed = args.seed;
        clustering = wum::som_train(matrix, params);
    } else {
        throw std::invalid_argument("--algo must be art1, kmeans, or som");
    }

    if (!args.assignments_out.empty()) wum::write_assignments_file(args.assignments_out, clustering);

    if (args.json_out) {
        std::cout << clustering_json(clustering).dump() << '\n';
    } else {
        std::cout << clustering.algorithm << " produced " << clustering.num_clusters()
                  << " clusters (" << clustering.params << ")\n";
        print_prototypes(clustering, binary_prototypes);
    }
    return 0;
}

// ---- evaluate ------------------------------------------------------------

struct EvaluateArgs {
    std::string matrix_path;
    std::string assignments_path;
    bool require_truth = false;
    double sigma = 1.0;
    double beta = 0.5;
    std::string out_path;
    bool json_out = false;
};

// Rebuilds a Clustering from an assignment CSV; prototypes become member
// centroids since the file carries no model.
wum::Clustering clustering_from_assignments(const wum::PatternMatrix& matrix,
                                            const std::unordered_map<std::string, int>& raw) {
    std::vector<int> ids;
    ids.reserve(raw.size());
    for (const auto& [host, id] : raw) {
        (void)host;
        ids.push_back(id);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::unordered_map<int, int> dense;
    for (std::size_t i = 0; i < ids.size(); ++i) dense[ids[i]] = static_cast<int>(i);

    wum::Clustering clustering;
    clustering.algorithm = "external";
    for (const auto& [host, id] : raw) clustering.assignments[host] = dense.at(id);

    const std::size_t C = ids.size();
    std::vector<std::vector<double>> sums(C, std::vector<double>(matrix.n(), 0.0));
    std::vector<std::size_t> sizes(C, 0);
    for (const auto& pv : matrix.patterns) {
        const auto it = clustering.assignments.find(pv.host);
        if (it == clustering.assignments.end()) {
            throw wum::DataError("assignments do not match matrix hosts");
        }
        ++sizes[it->second];
        for (std::size_t i = 0; i < matrix.n(); ++i) {
            if (pv.bits.test(i)) sums[it->second][i] += 1.0;
        }
    }
    for (std::size_t c = 0; c < C; ++c) {
        if (sizes[c] == 0) throw wum::DataError("assignment refers to cluster with no hosts");
        for (auto& x : sums[c]) x /= static_cast<double>(sizes[c]);
    }
    clustering.prototypes = std::move(sums);
    return clustering;
}

int run_evaluate(const EvaluateArgs& args) {
    const wum::PatternMatrix matrix = wum::read_matrix_file(args.matrix_path);
    const auto raw = wum::read_assignments_file(args.assignments_path);
    const wum::Clustering clustering = clustering_from_assignments(matrix, raw);
    if (args.require_truth && matrix.ground_truth.empty()) {
        throw wum::DataError("--truth requested but matrix carries no ground truth");
    }
    const wum::QualityReport report =
        wum::evaluate_quality(clustering, matrix, args.sigma, args.beta);

    if (!args.out_path.empty()) {
        write_text_file(args.out_path,
                        wum::QualityReport::csv_header() + "\n" + report.csv_row() + "\n");
    }
    if (args.json_out) {
        std::cout << report.to_json() << '\n';
    } else {
        std::cout << wum::QualityReport::csv_header() << '\n' << report.csv_row() << '\n';
    }
    return 0;
}

// ---- bench ---------------------------------------------------------------

struct BenchArgs {
    wum::BenchConfig config;
    std::string out_dir = ".";
    bool json_out = false;
};

int run_bench(const BenchArgs& args) {
    const auto timing = wum::run_timing(args.config);
    {
        std::ofstream out(args.out_dir + "/timings.csv");
        if (!out) throw wum::DataError("cannot open for writing: " + args.out_dir + "/timings.csv");
        wum::write_timings_csv(out, timing);
    }
    const auto quality = wum::run_quality_curves(args.config);
    {
        std::ofstream out(args.out_dir + "/quality.csv");
        if (!out) throw wum::DataError("cannot open for writing: " + args.out_dir + "/quality.csv");
        wum::write_quality_csv(out, quality);
    }

    const bool can_fit = args.config.host_counts.size() >= 3;
    std::map<std::string, wum::ScalingFit> fits;
    if (can_fit) fits = wum::fit_scaling(timing);

    if (args.json_out) {
        json j;
        j["timings"] = json::array();
        for (const auto& row : timing) {
            j["timings"].push_back({{"algorithm", row.algorithm},
                                    {"hosts", row.hosts},
                                    {"median_seconds", row.median_seconds}});
        }
        j["scaling"] = json::object();
        for (const auto& [algo, fit] : fits) {
            j["scaling"][algo] = {{"slope", fit.slope}, {"r2", fit.r2}};
        }
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "median seconds by algorithm and host count:\n";
        for (const auto& row : timing) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "  %-8s %6zu  %.6f\n", row.algorithm.c_str(),
                          row.hosts, row.median_seconds);
            std::cout << buf;
        }
        if (can_fit) {
            std::cout << "log-log scaling slopes:\n";
            for (const auto& [algo, fit] : fits) {
                char buf[64];
                std::snprintf(buf, sizeof(buf), "  %-8s slope %.3f (R² %.3f)\n", algo.c_str(),
                              fit.slope, fit.r2);
                std::cout << buf;
            }
        }
        std::cout << "wrote " << args.out_dir << "/timings.csv and " << args.out_dir
                  << "/quality.csv\n";
    }
    return 0;
}

// ---- sweep ---------------------------------------------------------------

struct SweepArgs {
    std::string matrix_path;
    double rho_from = 0.3;
    double rho_to = 0.5;
    double rho_step = 0.05;
    std::vector<std::size_t> k_values;
    std::string out_path = "sweep.csv";
    std::size_t jobs = 1;
    std::uint64_t seed = 42;
    bool json_out = false;
};

int run_sweep(const SweepArgs& args) {
    if (!(args.rho_step > 0.0)) throw std::invalid_argument("--rho-step must be positive");
    if (args.rho_to < args.rho_from) throw std::invalid_argument("--rho-to must be >= --rho-from");
    if (args.jobs == 0) throw std::invalid_argument("--jobs must be positive");

    wum::PatternMatrix matrix;
    if (args.matrix_path.empty()) {
        wum::BenchConfig config;
        config.seed = args.seed;
        matrix = wum::bench_matrix(config, config.quality_hosts, config.noise);
    } else {
        matrix = wum::read_matrix_file(args.matrix_path);
    }

    std::vector<double> rhos;
    for (std::size_t i = 0;; ++i) {
        const double rho = args.rho_from + static_cast<double>(i) * args.rho_step;
        if (rho > args.rho_to + 1e-9) break;
        rhos.push_back(std::min(rho, 1.0));
    }

    std::vector<wum::QualityRow> rows(rhos.size());
    for (std::size_t start = 0; start < rhos.size(); start += args.jobs) {
        const std::size_t end = std::min(start + args.jobs, rhos.size());
        std::vector<std::future<wum::QualityRow>> batch;
        for (std::size_t i = start; i < end; ++i) {
            batch.push_back(std::async(std::launch::async, [&matrix, rho = rhos[i]] {
                wum::Art1Params params;
                params.rho = rho;
                const auto result = wum::art1_train(matrix, params);
                return wum::score_clustering("art1", rho, result.clustering, matrix);
            }));
        }
        for (std::size_t i = start; i < end; ++i) rows[i] = batch[i - start].get();
    }

    for (const std::size_t k : args.k_values) {
        wum::KMeansParams kp;
        kp.k = k;
        kp.seed = args.seed;
        rows.push_back(wum::score_clustering("kmeans", static_cast<double>(k),
                                             wum::kmeans_train(matrix, kp).clustering, matrix));
        wum::SomParams sp;
        std::tie(sp.grid_w, sp.grid_h) = wum::som_grid_for(k);
        sp.seed = args.seed;
        rows.push_back(wum::score_clustering("som", static_cast<double>(k),
                                             wum::som_train(matrix, sp), matrix));
    }

    std::ostringstream csv;
    wum::write_quality_csv(csv, rows);
    write_text_file(args.out_path, csv.str());

    if (args.json_out) {
        json j = json::array();
        for (const auto& row : rows) {
            j.push_back({{"algorithm", row.algorithm},
                         {"param", row.param},
                         {"clusters", row.clusters},
                         {"avg_inter", row.avg_inter},
                         {"avg_intra", row.avg_intra},
                         {"cmp", row.cmp},
                         {"sep", row.sep},
                         {"ocq", row.ocq}});
        }
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "wrote " << args.out_path << " (" << rows.size() << " rows)\n";
    }
    return 0;
}

// ---- generators ----------------------------------------------------------

struct GenLogArgs {
    wum::LogGenParams params;
    std::string out_path;
    std::string expected_path;
    bool json_out = false;
};

int run_gen_log(const GenLogArgs& args) {
    const wum::GeneratedLog log = wum::gen_log(args.params);
    write_text_file(args.out_path, log.text);
    if (!args.expected_path.empty()) wum::write_matrix_file(args.expected_path, log.expected);
    const std::size_t lines = static_cast<std::size_t>(
        std::count(log.text.begin(), log.text.end(), '\n'));
    if (args.json_out) {
        json j;
        j["out"] = args.out_path;
        j["lines"] = lines;
        j["hosts"] = log.expected.m();
        j["features"] = log.expected.n();
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "wrote " << args.out_path << ": " << lines << " lines covering "
                  << log.expected.m() << " hosts\n";
    }
    return 0;
}

struct GenMatrixArgs {
    wum::PlantedParams params;
    std::string out_path;
    bool json_out = false;
};

int run_gen_matrix(const GenMatrixArgs& args) {
    const wum::PatternMatrix matrix = wum::gen_planted(args.params);
    wum::write_matrix_file(args.out_path, matrix);
    if (args.json_out) {
        json j;
        j["out"] = args.out_path;
        j["hosts"] = matrix.m();
        j["features"] = matrix.n();
        j["clusters"] = args.params.k;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "wrote " << args.out_path << ": " << matrix.m() << " hosts x " << matrix.n()
                  << " features, " << args.params.k << " planted clusters\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cluster web hosts by their binary URL-access patterns"};
    app.require_subcommand(1);

    PreprocessArgs pre;
    auto* cmd_pre = app.add_subcommand("preprocess", "Parse an access log into a pattern matrix");
    cmd_pre->add_option("--log", pre.log_path, "Access log file (Common Log Format)")
        ->required()
        ->check(CLI::ExistingFile);
    cmd_pre->add_option("--out", pre.out_path, "Output pattern matrix file")->required();
    cmd_pre->add_option("--tau", pre.tau, "Access-count threshold for a 1 bit")
        ->check(CLI::PositiveNumber);
    cmd_pre->add_option("--min-url-support", pre.min_url_support,
                        "Minimum distinct hosts per URL feature");
    cmd_pre->add_option("--status-max", pre.status_max, "Keep records with status <= this");
    cmd_pre->add_option("--methods", pre.methods, "HTTP methods to keep ('*' for all)")
        ->delimiter(',');
    cmd_pre->add_option("--ext-blocklist", pre.ext_blocklist,
                        "Drop URLs ending in these extensions (e.g. .gif,.css)")
        ->delimiter(',');
    cmd_pre->add_flag("--json", pre.json_out, "Machine-readable output");

    ClusterArgs clu;
    auto* cmd_clu = app.add_subcommand("cluster", "Cluster a pattern matrix");
    cmd_clu->add_option("--matrix", clu.matrix_path, "Pattern matrix file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd_clu->add_option("--algo", clu.algo, "art1, kmeans, or som")->required();
    cmd_clu->add_option("--rho", clu.rho, "Vigilance parameter (art1)")
        ->check(CLI::Range(0.0, 1.0));
    cmd_clu->add_option("--max-epochs", clu.max_epochs, "Epoch cap (art1)")
        ->check(CLI::PositiveNumber);
    cmd_clu->add_option("--max-clusters", clu.max_clusters, "Cluster budget, 0 = unbounded (art1)");
    cmd_clu->add_option("--k", clu.k, "Cluster count (kmeans)")->check(CLI::PositiveNumber);
    cmd_clu->callback([&clu, cmd_clu] { clu.k_given = cmd_clu->count("--k") > 0; });
    cmd_clu->add_option("--grid", clu.grid, "SOM grid WxH");
    cmd_clu->add_option("--iters", clu.iters, "SOM training steps (default 10x hosts)");
    cmd_clu->add_option("--lr", clu.lr, "SOM initial learning rate");
    cmd_clu->add_option("--radius", clu.radius, "SOM initial neighborhood radius");
    cmd_clu->add_option("--seed", clu.seed, "Random seed (kmeans/som)");
    cmd_clu->add_option("--out", clu.model_out, "Model file to write (art1)");
    cmd_clu->add_option("--assignments", clu.assignments_out, "Assignment CSV to write");
    cmd_clu->add_flag("--json", clu.json_out, "Machine-readable output");

    EvaluateArgs eva;
    auto* cmd_eva = app.add_subcommand("evaluate", "Score a clustering against a matrix");
    cmd_eva->add_option("--matrix", eva.matrix_path, "Pattern matrix file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd_eva->add_option("--assignments", eva.assignments_path, "Assignment CSV from `cluster`")
        ->required()
        ->check(CLI::ExistingFile);
    cmd_eva->add_flag("--truth", eva.require_truth,
                      "Require ground truth in the matrix (Rand index)");
    cmd_eva->add_option("--sigma", eva.sigma, "Separation kernel width");
    cmd_eva->add_option("--beta", eva.beta, "Compactness weight in the overall measure");
    cmd_eva->add_option("--out", eva.out_path, "Also write the report as CSV");
    cmd_eva->add_flag("--json", eva.json_out, "Machine-readable output");

    BenchArgs ben;
    auto* cmd_ben = app.add_subcommand("bench", "Run the timing and quality benchmarks");
    cmd_ben->add_option("--hosts", ben.config.host_counts, "Host counts to time")->delimiter(',');
    cmd_ben->add_option("--reps", ben.config.repetitions, "Timing repetitions")
        ->check(CLI::PositiveNumber);
    cmd_ben->add_option("--seed", ben.config.seed, "Random seed");
    cmd_ben->add_option("--features", ben.config.features, "URL feature count")
        ->check(CLI::PositiveNumber);
    cmd_ben->add_option("--noise", ben.config.noise, "Bit-flip rate, quality instance");
    cmd_ben->add_option("--timing-noise", ben.config.timing_noise,
                        "Bit-flip rate, timing instances");
    cmd_ben->add_option("--out-dir", ben.out_dir, "Directory for timings.csv / quality.csv")
        ->check(CLI::ExistingDirectory);
    cmd_ben->add_flag("--json", ben.json_out, "Machine-readable output");

    SweepArgs swe;
    auto* cmd_swe = app.add_subcommand("sweep", "Vigilance sweep (plus optional baseline k sweep)");
    cmd_swe->add_option("--matrix", swe.matrix_path,
                        "Pattern matrix file (default: pinned synthetic instance)")
        ->check(CLI::ExistingFile);
    cmd_swe->add_option("--rho-from", swe.rho_from, "Sweep start")->check(CLI::Range(0.0, 1.0));
    cmd_swe->add_option("--rho-to", swe.rho_to, "Sweep end")->check(CLI::Range(0.0, 1.0));
    cmd_swe->add_option("--rho-step", swe.rho_step, "Sweep step");
    cmd_swe->add_option("--k-values", swe.k_values, "Baseline cluster counts")->delimiter(',');
    cmd_swe->add_option("--out", swe.out_path, "Output CSV path");
    cmd_swe->add_option("--jobs", swe.jobs, "Parallel sweep workers")->check(CLI::PositiveNumber);
    cmd_swe->add_option("--seed", swe.seed, "Random seed");
    cmd_swe->add_flag("--json", swe.json_out, "Machine-readable output");

    GenLogArgs glog;
    auto* cmd_glog = app.add_subcommand("gen-log", "Generate a synthetic access log");
    cmd_glog->add_option("--hosts", glog.params.hosts, "Host count")->check(CLI::PositiveNumber);
    cmd_glog->add_option("--urls", glog.params.urls, "URL count")->check(CLI::PositiveNumber);
    cmd_glog->add_option("--k", glog.params.k, "Planted cluster count")
        ->check(CLI::PositiveNumber);
    cmd_glog->add_option("--density", glog.params.density, "Prototype bit density");
    cmd_glog->add_option("--noise", glog.params.noise, "Bit-flip rate");
    cmd_glog->add_option("--seed", glog.params.seed, "Random seed");
    cmd_glog->add_option("--out", glog.out_path, "Log file to write")->required();
    cmd_glog->add_option("--expected", glog.expected_path,
                         "Also write the matrix ingestion should recover");
    cmd_glog->add_flag("--json", glog.json_out, "Machine-readable output");

    GenMatrixArgs gmat;
    auto* cmd_gmat = app.add_subcommand("gen-matrix", "Generate a planted pattern matrix");
    cmd_gmat->add_option("--n", gmat.params.n, "Feature count")->check(CLI::PositiveNumber);
    cmd_gmat->add_option("--k", gmat.params.k, "Planted cluster count")
        ->check(CLI::PositiveNumber);
    cmd_gmat->add_option("--per-cluster", gmat.params.per_cluster, "Hosts per cluster")
        ->check(CLI::PositiveNumber);
    cmd_gmat->add_option("--density", gmat.params.density, "Prototype bit density");
    cmd_gmat->add_option("--noise", gmat.params.noise, "Bit-flip rate");
    cmd_gmat->add_option("--max-overlap", gmat.params.max_overlap,
                         "Pairwise Jaccard overlap bound for prototypes");
    cmd_gmat->add_option("--seed", gmat.params.seed, "Random seed");
    cmd_gmat->add_option("--out", gmat.out_path, "Matrix file to write")->required();
    cmd_gmat->add_flag("--json", gmat.json_out, "Machine-readable output");

    try {
        app.parse(argc, argv);
        if (cmd_pre->parsed()) return run_preprocess(pre);
        if (cmd_clu->parsed()) return run_cluster(clu);
        if (cmd_eva->parsed()) return run_evaluate(eva);
        if (cmd_ben->parsed()) return run_bench(ben);
        if (cmd_swe->parsed()) return run_sweep(swe);
        if (cmd_glog->parsed()) return run_gen_log(glog);
        if (cmd_gmat->parsed()) return run_gen_matrix(gmat);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const wum::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
