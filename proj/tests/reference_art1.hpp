#pragma once

// Independent straight-line trace of the binary resonance clustering
// procedure, used only to cross-check the production implementation.
// Deliberately shares no code with the library: plain nested vectors, a
// fixed node capacity, and explicit step-by-step arithmetic.

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace refart {

struct Trace {
    std::vector<std::vector<double>> w;  // bottom-up weights, node x feature
    std::vector<std::vector<int>> v;     // top-down templates, node x feature
    std::vector<int> committed;          // 1 once a node has resonated
    std::vector<int> assignments;        // node index per pattern, last epoch
    std::size_t nodes_used = 0;          // committed node count
    std::size_t epochs = 0;
};

// patterns: m rows of n binary values, each with at least one 1.
// capacity must exceed the number of nodes the run will commit.
inline Trace run(const std::vector<std::vector<int>>& patterns, std::size_t n,
                 std::size_t capacity, double rho, std::size_t max_epochs) {
    Trace t;
    // initialization: bottom-up 2/(1+n), top-down all ones
    t.w.assign(capacity, std::vector<double>(n, 2.0 / (1.0 + double(n))));
    t.v.assign(capacity, std::vector<int>(n, 1));
    t.committed.assign(capacity, 0);
    t.assignments.assign(patterns.size(), -1);

    for (std::size_t epoch = 0; epoch < max_epochs; ++epoch) {
        bool any_change = false;
        const auto w_before = t.w;
        const auto v_before = t.v;
        for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
            const std::vector<int>& p = patterns[pi];
            // matching scores for every node
            std::vector<double> y(capacity, 0.0);
            for (std::size_t j = 0; j < capacity; ++j) {
                double s = 0.0;
                for (std::size_t i = 0; i < n; ++i)
                    if (p[i]) s += t.w[j][i];
                y[j] = s;
            }
            // search cycle: best active node, vigilance, reset on failure
            std::vector<int> active(capacity, 1);
            int winner = -1;
            for (;;) {
                winner = -1;
                double best = 0.0;
                for (std::size_t j = 0; j < capacity; ++j) {
                    if (active[j] && (winner < 0 || y[j] > best)) {
                        winner = int(j);
                        best = y[j];
                    }
                }
                if (winner < 0) throw std::runtime_error("capacity exhausted");
                double pnorm = 0.0;
                double overlap = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    pnorm += double(p[i]);
                    overlap += double(t.v[winner][i]) * double(p[i]);
                }
                if (overlap / pnorm >= rho) break;
                active[winner] = 0;
            }
            // resonance: intersect the template, renormalize bottom-up
            double vp = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                vp += double(t.v[winner][i]) * double(p[i]);
            for (std::size_t i = 0; i < n; ++i) {
                const int vi = t.v[winner][i] * p[i];
                t.w[winner][i] = double(vi) / (0.5 + vp);
                t.v[winner][i] = vi;
            }
            t.committed[winner] = 1;
            if (t.assignments[pi] != winner) any_change = true;
            t.assignments[pi] = winner;
        }
        t.epochs = epoch + 1;
        if (!any_change && t.w == w_before && t.v == v_before) break;
    }
    std::size_t used = 0;
    for (std::size_t j = 0; j < capacity; ++j)
        if (t.committed[j]) used = j + 1;
    t.nodes_used = used;
    return t;
}

}  // namespace refart
