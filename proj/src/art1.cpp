#include "wum/art1.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wum/errors.hpp"

namespace wum {

void Art1Params::validate() const {
    if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("rho must be in [0,1]");
    if (max_epochs == 0) throw std::invalid_argument("max_epochs must be positive");
}

VigilanceResult vigilance_test(const BitVector& top_down, const BitVector& p, double rho) {
    const double overlap = static_cast<double>(BitVector::and_count(top_down, p));
    const double norm = static_cast<double>(p.count());
    const double ratio = overlap / norm;
    return {ratio >= rho, ratio};
}

std::pair<std::vector<double>, BitVector> uncommitted_weights(std::size_t n) {
    const double w0 = 2.0 / (1.0 + static_cast<double>(n));
    return {std::vector<double>(n, w0), BitVector(n, true)};
}

Art1Model::Art1Model(std::size_t n, Art1Params params) : n_(n), params_(params) {
    if (n == 0) throw std::invalid_argument("feature count must be positive");
    params_.validate();
}

std::vector<double> Art1Model::match_scores(const BitVector& p) const {
    std::vector<double> scores(clusters_.size() + 1, 0.0);
    for (std::size_t j = 0; j < clusters_.size(); ++j) {
        double y = 0.0;
        const auto& w = clusters_[j].bottom_up;
        for (std::size_t i = 0; i < n_; ++i) {
            if (p.test(i)) y += w[i];
        }
        scores[j] = y;
    }
    const double w0 = 2.0 / (1.0 + static_cast<double>(n_));
    double y = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        if (p.test(i)) y += w0;
    }
    scores.back() = y;
    return scores;
}

void Art1Model::resonate(std::size_t j, const BitVector& p) {
    if (j == clusters_.size()) {
        if (params_.max_clusters != 0 && clusters_.size() >= params_.max_clusters) {
            throw DataError("cluster budget exhausted");
        }
        clusters_.push_back({BitVector(n_, true), {}});
    }
    Cluster& c = clusters_[j];
    c.top_down &= p;
    const double denom = 0.5 + static_cast<double>(c.top_down.count());
    c.bottom_up.assign(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        if (c.top_down.test(i)) c.bottom_up[i] = 1.0 / denom;
    }
}

int Art1Model::present(const BitVector& p) {
    const std::vector<double> scores = match_scores(p);
    const BitVector all_ones(n_, true);
    std::vector<char> active(scores.size(), 1);
    // The uncommitted node stays active and always passes vigilance (its
    // prototype is all ones, ratio exactly 1), so the search terminates.
    while (true) {
        int best = -1;
        double best_score = 0.0;
        for (std::size_t j = 0; j < scores.size(); ++j) {
            if (active[j] && (best < 0 || scores[j] > best_score)) {
                best = static_cast<int>(j);
                best_score = scores[j];
            }
        }
        const std::size_t j = static_cast<std::size_t>(best);
        const BitVector& v = j == clusters_.size() ? all_ones : clusters_[j].top_down;
        if (vigilance_test(v, p, params_.rho).pass) {
            resonate(j, p);
            return best;
        }
        active[j] = 0;
    }
}

std::optional<int> Art1Model::assign(const BitVector& p) const {
    const std::vector<double> scores = match_scores(p);
    std::vector<char> active(clusters_.size(), 1);
    for (std::size_t remaining = clusters_.size(); remaining > 0; --remaining) {
        int best = -1;
        double best_score = 0.0;
        for (std::size_t j = 0; j < clusters_.size(); ++j) {
            if (active[j] && (best < 0 || scores[j] > best_score)) {
                best = static_cast<int>(j);
                best_score = scores[j];
            }
        }
        const std::size_t j = static_cast<std::size_t>(best);
        if (vigilance_test(clusters_[j].top_down, p, params_.rho).pass) return best;
        active[j] = 0;
    }
    return std::nullopt;
}

bool Art1Model::operator==(const Art1Model& other) const {
    if (n_ != other.n_ || clusters_.size() != other.clusters_.size()) return false;
    for (std::size_t j = 0; j < clusters_.size(); ++j) {
        if (clusters_[j].top_down != other.clusters_[j].top_down) return false;
        if (clusters_[j].bottom_up != other.clusters_[j].bottom_up) return false;
    }
    return true;
}

void Art1Model::save(const std::string& path) const {
    nlohmann::json doc;
    doc["rho"] = params_.rho;
    doc["n"] = n_;
    doc["clusters"] = nlohmann::json::array();
    for (const auto& c : clusters_) {
        nlohmann::json jc;
        auto& td = jc["top_down"] = nlohmann::json::array();
        for (std::size_t i = 0; i < n_; ++i) td.push_back(c.top_down.test(i) ? 1 : 0);
        jc["bottom_up"] = c.bottom_up;
        doc["clusters"].push_back(std::move(jc));
    }
    std::ofstream out(path);
    if (!out) throw DataError("cannot open for writing: " + path);
    out << doc.dump(2) << '\n';
    if (!out) throw DataError("write failed: " + path);
}

Art1Model Art1Model::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw DataError("model parse error: " + std::string(e.what()));
    }
    try {
        Art1Params params;
        params.rho = doc.at("rho").get<double>();
        const std::size_t n = doc.at("n").get<std::size_t>();
        Art1Model model(n, params);
        for (const auto& jc : doc.at("clusters")) {
            Cluster c;
            const auto& td = jc.at("top_down");
            if (td.size() != n) throw DataError("model top_down width mismatch");
            c.top_down = BitVector(n);
            for (std::size_t i = 0; i < n; ++i) {
                const int bit = td[i].get<int>();
                if (bit != 0 && bit != 1) throw DataError("model top_down entries must be 0 or 1");
                if (bit) c.top_down.set(i);
            }
            c.bottom_up = jc.at("bottom_up").get<std::vector<double>>();
            if (c.bottom_up.size() != n) throw DataError("model bottom_up width mismatch");
            model.clusters_.push_back(std::move(c));
        }
        return model;
    } catch (const nlohmann::json::exception& e) {
        throw DataError("model parse error: " + std::string(e.what()));
    } catch (const std::invalid_argument& e) {
        throw DataError("model parse error: " + std::string(e.what()));
    }
}

Art1TrainResult art1_train(const PatternMatrix& matrix, const Art1Params& params) {
    params.validate();
    if (matrix.patterns.empty()) throw std::invalid_argument("pattern matrix is empty");

    Art1Model model(matrix.n(), params);
    std::vector<int> assignment(matrix.m(), -1);
    std::size_t epoch = 0;
    for (; epoch < params.max_epochs; ++epoch) {
        const Art1Model before = model;
        bool changed = false;
        for (std::size_t t = 0; t < matrix.patterns.size(); ++t) {
            const int id = model.present(matrix.patterns[t].bits);
            if (id != assignment[t]) changed = true;
            assignment[t] = id;
        }
        if (!changed && model == before) {
            ++epoch;
            break;
        }
    }

    // Drop memberless clusters from the reported clustering and renumber.
    std::vector<int> remap(model.clusters().size(), -1);
    Clustering clustering;
    clustering.algorithm = "art1";
    std::ostringstream ps;
    ps << "rho=" << params.rho;
    clustering.params = ps.str();
    for (std::size_t t = 0; t < matrix.patterns.size(); ++t) {
        const std::size_t raw = static_cast<std::size_t>(assignment[t]);
        if (remap[raw] < 0) {
            remap[raw] = static_cast<int>(clustering.prototypes.size());
            clustering.prototypes.push_back(model.clusters()[raw].top_down.to_doubles());
        }
        clustering.assignments[matrix.patterns[t].host] = remap[raw];
    }
    return {std::move(model), std::move(clustering), std::move(assignment), epoch};
}

}  // namespace wum
