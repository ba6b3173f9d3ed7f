#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wum/baselines.hpp"
#include "wum/errors.hpp"
#include "wum/features.hpp"
#include "wum/quality.hpp"
#include "wum/synth.hpp"

using namespace wum;

namespace {

PatternMatrix matrix_of(const std::vector<std::string>& rows) {
    PatternMatrix m;
    for (std::size_t i = 0; i < rows[0].size(); ++i)
        m.base.urls.push_back("/u" + std::to_string(i));
    for (std::size_t t = 0; t < rows.size(); ++t)
        m.patterns.push_back({"h" + std::to_string(t), BitVector::from_string(rows[t])});
    return m;
}

PatternMatrix random_matrix(std::mt19937_64& rng, std::size_t n, std::size_t m) {
    std::vector<std::string> rows;
    for (std::size_t t = 0; t < m; ++t) {
        std::string row(n, '0');
        do {
            for (auto& ch : row) ch = (rng() % 2) ? '1' : '0';
        } while (row.find('1') == std::string::npos);
        rows.push_back(row);
    }
    return matrix_of(rows);
}

PatternMatrix planted3(std::uint64_t seed) {
    PlantedParams pp;
    pp.n = 32;
    pp.k = 3;
    pp.per_cluster = 8;
    pp.density = 0.3;
    pp.noise = 0.0;
    pp.seed = seed;
    return gen_planted(pp);
}

}  // namespace

TEST_CASE("squared distance between bits and real vectors") {
    CHECK(squared_distance(BitVector::from_string("101"), {1.0, 0.0, 1.0}) == 0.0);
    CHECK(squared_distance(BitVector::from_string("100"), {0.0, 0.5, 1.0}) ==
          doctest::Approx(1.0 + 0.25 + 1.0));
}

TEST_CASE("kmeans with k=1 yields the mean centroid") {
    PatternMatrix m = matrix_of({"1100", "1000", "1110"});
    auto res = kmeans_train(m, {1, 100, 7});
    REQUIRE(res.clustering.num_clusters() == 1);
    const auto& c = res.clustering.prototypes[0];
    CHECK(c[0] == doctest::Approx(1.0));
    CHECK(c[1] == doctest::Approx(2.0 / 3.0));
    CHECK(c[2] == doctest::Approx(1.0 / 3.0));
    CHECK(c[3] == doctest::Approx(0.0));
    CHECK(res.converged);
}

TEST_CASE("kmeans with k equal to pattern count separates everything") {
    PatternMatrix m = matrix_of({"1100", "0011", "1010", "0101"});
    auto res = kmeans_train(m, {4, 100, 3});
    CHECK(res.clustering.num_clusters() == 4);
    CHECK(res.objective_history.back() == 0.0);
}

TEST_CASE("kmeans rejects k larger than the pattern count") {
    PatternMatrix m = matrix_of({"10", "01"});
    CHECK_THROWS_WITH_AS(kmeans_train(m, {3, 100, 0}), "k exceeds number of patterns",
                         DataError);
    CHECK_THROWS_AS(kmeans_train(m, {0, 100, 0}), std::invalid_argument);
}

TEST_CASE("kmeans objective never increases") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        PatternMatrix m = random_matrix(rng, 12, 30);
        KMeansParams p{std::size_t(1 + trial % 6), 100, std::uint64_t(trial)};
        auto res = kmeans_train(m, p);
        REQUIRE(!res.objective_history.empty());
        for (std::size_t i = 1; i < res.objective_history.size(); ++i)
            CHECK(res.objective_history[i] <= res.objective_history[i - 1]);
    }
}

TEST_CASE("kmeans is deterministic for a fixed seed") {
    std::mt19937_64 rng(43);
    PatternMatrix m = random_matrix(rng, 10, 20);
    auto a = kmeans_train(m, {4, 100, 9});
    auto b = kmeans_train(m, {4, 100, 9});
    CHECK(a.clustering.assignments == b.clustering.assignments);
    CHECK(a.clustering.prototypes == b.clustering.prototypes);
    CHECK(a.objective_history == b.objective_history);
}

TEST_CASE("kmeans recovers planted clusters across seeds") {
    PatternMatrix m = planted3(100);
    std::vector<double> rands;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto res = kmeans_train(m, {3, 100, seed});
        rands.push_back(rand_index(res.clustering.assignments, m.ground_truth));
    }
    std::sort(rands.begin(), rands.end());
    CHECK(rands[rands.size() / 2] >= 0.95);
}

TEST_CASE("kmeans output drops empty clusters") {
    // duplicate-heavy data forces empty clusters even after reseeding
    PatternMatrix m = matrix_of({"1100", "1100", "1100", "1100"});
    auto res = kmeans_train(m, {2, 100, 1});
    CHECK(res.clustering.num_clusters() >= 1);
    const auto sizes = cluster_sizes(res.clustering);
    for (auto s : sizes) CHECK(s > 0);
    CHECK(res.clustering.prototypes.size() == sizes.size());
}

TEST_CASE("som on a 1x1 grid produces a single cluster") {
    std::mt19937_64 rng(47);
    PatternMatrix m = random_matrix(rng, 8, 10);
    SomParams p;
    p.grid_w = 1;
    p.grid_h = 1;
    p.seed = 5;
    Clustering c = som_train(m, p);
    CHECK(c.num_clusters() == 1);
    CHECK(c.assignments.size() == m.m());
}

TEST_CASE("som with zero iterations still assigns every pattern") {
    std::mt19937_64 rng(53);
    PatternMatrix m = random_matrix(rng, 8, 12);
    SomParams p;
    p.iters = 0;
    p.seed = 2;
    Clustering c = som_train(m, p);
    CHECK(c.assignments.size() == m.m());
    CHECK(c.num_clusters() >= 1);
    for (const auto& proto : c.prototypes)
        for (double x : proto) {
            CHECK(x >= 0.0);
            CHECK(x <= 1.0);
        }
}

TEST_CASE("som weights stay inside the unit cube after training") {
    std::mt19937_64 rng(59);
    PatternMatrix m = random_matrix(rng, 10, 25);
    SomParams p;
    p.grid_w = 3;
    p.grid_h = 2;
    p.seed = 11;
    Clustering c = som_train(m, p);
    for (const auto& proto : c.prototypes)
        for (double x : proto) {
            CHECK(x >= 0.0);
            CHECK(x <= 1.0);
        }
}

TEST_CASE("som is deterministic for a fixed seed") {
    std::mt19937_64 rng(61);
    PatternMatrix m = random_matrix(rng, 9, 18);
    SomParams p;
    p.seed = 77;
    Clustering a = som_train(m, p);
    Clustering b = som_train(m, p);
    CHECK(a.assignments == b.assignments);
    CHECK(a.prototypes == b.prototypes);
}

TEST_CASE("som recovers planted structure on a 2x2 grid") {
    PatternMatrix m = planted3(200);
    std::vector<double> rands;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SomParams p;
        p.seed = seed;
        Clustering c = som_train(m, p);
        rands.push_back(rand_index(c.assignments, m.ground_truth));
    }
    std::sort(rands.begin(), rands.end());
    CHECK(rands[rands.size() / 2] >= 0.9);
}

TEST_CASE("baseline parameter validation") {
    SomParams bad_lr;
    bad_lr.initial_lr = 0.0;
    CHECK_THROWS_AS(bad_lr.validate(), std::invalid_argument);
    bad_lr.initial_lr = 1.5;
    CHECK_THROWS_AS(bad_lr.validate(), std::invalid_argument);
    SomParams bad_grid;
    bad_grid.grid_w = 0;
    CHECK_THROWS_AS(bad_grid.validate(), std::invalid_argument);
    KMeansParams bad_k;
    bad_k.k = 0;
    CHECK_THROWS_AS(bad_k.validate(), std::invalid_argument);
}
