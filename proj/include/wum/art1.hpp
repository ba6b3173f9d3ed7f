#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wum/bitvec.hpp"
#include "wum/clustering.hpp"
#include "wum/features.hpp"

namespace wum {

struct Art1Params {
    double rho = 0.5;             // vigilance, in [0,1]
    std::size_t max_epochs = 100;
    std::size_t max_clusters = 0;  // 0 = unbounded

    void validate() const;
};

struct VigilanceResult {
    bool pass = false;
    double ratio = 0.0;
};

// |v ∧ p| / ‖p‖₁ compared against rho. Passing uses ≥, so rho = 1 demands an
// exact subset match instead of deadlocking.
VigilanceResult vigilance_test(const BitVector& top_down, const BitVector& p, double rho);

// Initial weights of a not-yet-committed node: bottom-up all 2/(1+n),
// top-down all ones.
std::pair<std::vector<double>, BitVector> uncommitted_weights(std::size_t n);

class Art1Model {
public:
    struct Cluster {
        BitVector top_down;              // binary prototype
        std::vector<double> bottom_up;   // top_down / (0.5 + ‖top_down‖₁)
    };

    Art1Model(std::size_t n, Art1Params params);

    std::size_t n() const { return n_; }
    const Art1Params& params() const { return params_; }
    const std::vector<Cluster>& clusters() const { return clusters_; }

    // One score per committed cluster plus a final slot for the uncommitted
    // node. Scores are left-to-right sums of bottom-up weights over p's set
    // bits, matching a straight-line evaluation of y = Σ w_i·p_i.
    std::vector<double> match_scores(const BitVector& p) const;

    // Applies the resonance update to committed cluster j, or commits a new
    // cluster when j equals the committed count.
    void resonate(std::size_t j, const BitVector& p);

    // Full search cycle: repeatedly take the best active node, vigilance-test
    // it, deactivate on failure. Returns the resonating cluster's id. Throws
    // DataError when a new cluster is needed but max_clusters is reached.
    int present(const BitVector& p);

    // Search without learning. std::nullopt when every committed cluster
    // fails vigilance.
    std::optional<int> assign(const BitVector& p) const;

    void save(const std::string& path) const;
    static Art1Model load(const std::string& path);

    bool operator==(const Art1Model& other) const;

private:
    std::size_t n_;
    Art1Params params_;
    std::vector<Cluster> clusters_;
};

struct Art1TrainResult {
    Art1Model model;
    Clustering clustering;             // compacted ids, no empty clusters
    std::vector<int> raw_assignments;  // model cluster id per pattern, last epoch
    std::size_t epochs = 0;
};

// Presents patterns in matrix order, epoch after epoch, until an epoch
// changes neither assignments nor weights (or max_epochs is hit).
Art1TrainResult art1_train(const PatternMatrix& matrix, const Art1Params& params);

}  // namespace wum
