#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "wum/bench.hpp"
#include "wum/errors.hpp"

using namespace wum;

namespace {

std::vector<TimingRow> power_rows(double exponent) {
    std::vector<TimingRow> rows;
    for (std::size_t n : {100u, 200u, 400u, 800u}) {
        TimingRow r;
        r.algorithm = "alg";
        r.hosts = n;
        r.median_seconds = 3e-6 * std::pow(double(n), exponent);
        r.seconds = {r.median_seconds};
        rows.push_back(r);
    }
    return rows;
}

BenchConfig tiny_config() {
    BenchConfig c;
    c.host_counts = {20, 30};
    c.repetitions = 2;
    c.features = 24;
    c.planted_k = 3;
    c.density = 0.3;
    c.quality_hosts = 24;
    c.rho_values = {0.3, 0.5};
    c.k_values = {1, 3};
    c.seed = 7;
    return c;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("scaling fit recovers constructed exponents") {
    auto lin = fit_scaling(power_rows(1.0));
    CHECK(lin.at("alg").slope == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(lin.at("alg").r2 == doctest::Approx(1.0).epsilon(1e-12));
    auto quad = fit_scaling(power_rows(2.0));
    CHECK(quad.at("alg").slope == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("scaling fit input validation") {
    auto rows = power_rows(1.0);
    rows.resize(2);
    CHECK_THROWS_AS(fit_scaling(rows), DataError);
    rows = power_rows(1.0);
    rows[1].median_seconds = 0.0;
    CHECK_THROWS_AS(fit_scaling(rows), DataError);
    rows = power_rows(1.0);
    for (auto& r : rows) r.hosts = 100;
    CHECK_THROWS_AS(fit_scaling(rows), DataError);
}

TEST_CASE("som grids are just big enough") {
    CHECK(som_grid_for(1) == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(som_grid_for(2) == std::pair<std::size_t, std::size_t>{2, 1});
    CHECK(som_grid_for(4) == std::pair<std::size_t, std::size_t>{2, 2});
    CHECK(som_grid_for(5) == std::pair<std::size_t, std::size_t>{3, 2});
    CHECK(som_grid_for(9) == std::pair<std::size_t, std::size_t>{3, 3});
    for (std::size_t c = 1; c <= 40; ++c) {
        auto [w, h] = som_grid_for(c);
        CHECK(w * h >= c);
    }
}

TEST_CASE("bench matrices are pinned by config and host count") {
    BenchConfig c = tiny_config();
    PatternMatrix a = bench_matrix(c, 20, c.timing_noise);
    PatternMatrix b = bench_matrix(c, 20, c.timing_noise);
    REQUIRE(a.m() == 20);
    CHECK(a.n() == 24);
    CHECK(a.ground_truth.size() == 20);
    for (std::size_t t = 0; t < a.m(); ++t) CHECK(a.patterns[t].bits == b.patterns[t].bits);
    // 20 hosts over 3 clusters: sizes differ by at most one
    std::vector<int> sizes(3, 0);
    for (const auto& [h, id] : a.ground_truth) ++sizes[id];
    for (int s : sizes) {
        CHECK(s >= 6);
        CHECK(s <= 7);
    }
}

TEST_CASE("timing runs cover every algorithm and host count") {
    BenchConfig c = tiny_config();
    auto rows = run_timing(c);
    REQUIRE(rows.size() == 6);  // 3 algorithms x 2 host counts
    for (const auto& r : rows) {
        CHECK((r.algorithm == "art1" || r.algorithm == "kmeans" || r.algorithm == "som"));
        REQUIRE(r.seconds.size() == 2);
        CHECK(r.median_seconds > 0.0);
        for (double s : r.seconds) CHECK(s > 0.0);
    }
    std::ostringstream csv;
    write_timings_csv(csv, rows);
    CHECK(first_line(csv.str()) == "algorithm,hosts,rep,seconds");
    std::size_t lines = 0;
    for (char ch : csv.str())
        if (ch == '\n') ++lines;
    CHECK(lines == 1 + 6 * 2);  // header + one line per repetition
}

TEST_CASE("quality curves sweep rho and k") {
    BenchConfig c = tiny_config();
    auto rows = run_quality_curves(c);
    REQUIRE(rows.size() == c.rho_values.size() + 2 * c.k_values.size());
    for (const auto& r : rows) {
        CHECK(r.clusters >= 1);
        if (r.clusters == 1) {
            CHECK(std::isnan(r.avg_inter));
            CHECK(std::isnan(r.sep));
            CHECK(std::isnan(r.ocq));
        } else {
            CHECK(r.avg_inter >= 0.0);
            CHECK(r.ocq >= 0.0);
        }
    }
    std::ostringstream csv;
    write_quality_csv(csv, rows);
    CHECK(first_line(csv.str()) ==
          "algorithm,param,clusters,avg_inter,avg_intra,cmp,sep,ocq");

    // k=1 rows exist and carry NaN in the csv as "nan"
    CHECK(csv.str().find("kmeans,1") != std::string::npos);
    CHECK(csv.str().find("nan") != std::string::npos);
}

TEST_CASE("config validation") {
    BenchConfig c = tiny_config();
    c.repetitions = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = tiny_config();
    c.host_counts = {};
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = tiny_config();
    c.host_counts = {2};  // fewer hosts than planted clusters
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}
