#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "wum/errors.hpp"
#include "wum/features.hpp"
#include "wum/logparse.hpp"
#include "wum/synth.hpp"

using namespace wum;

namespace {

AccessCounts make_counts(const std::vector<std::tuple<std::string, std::string, int>>& triples) {
    std::vector<LogRecord> rs;
    for (const auto& [h, u, c] : triples) {
        for (int i = 0; i < c; ++i) {
            LogRecord r;
            r.host = h;
            r.url = u;
            r.method = "GET";
            r.status = 200;
            r.timestamp = "t";
            rs.push_back(r);
        }
    }
    return aggregate(rs, RecordFilter{});
}

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("base vector keeps urls with enough distinct hosts") {
    AccessCounts ac = make_counts({{"h1", "/a", 1}, {"h2", "/a", 4}, {"h3", "/a", 1},
                                   {"h1", "/b", 9}});
    BaseVector d2 = build_base_vector(ac, 2);
    CHECK(d2.urls == std::vector<std::string>{"/a"});
    BaseVector d1 = build_base_vector(ac, 1);
    CHECK(d1.urls == std::vector<std::string>{"/a", "/b"});
    CHECK_THROWS_WITH_AS(build_base_vector(ac, 4), "no URLs meet support threshold",
                         DataError);
}

TEST_CASE("binarize thresholds counts and drops empty hosts") {
    AccessCounts ac = make_counts({{"h1", "/a", 2}, {"h2", "/b", 1}, {"h2", "/a", 5}});
    BaseVector base = build_base_vector(ac, 1);

    PatternMatrix m1 = binarize(ac, base, 1);
    REQUIRE(m1.m() == 2);
    CHECK(m1.patterns[0].host == "h1");
    CHECK(m1.patterns[0].bits.to_string() == "10");
    CHECK(m1.patterns[1].bits.to_string() == "11");

    std::vector<std::string> dropped;
    PatternMatrix m3 = binarize(ac, base, 3, &dropped);
    REQUIRE(m3.m() == 1);  // h1's only count is 2 < 3
    CHECK(m3.patterns[0].host == "h2");
    CHECK(m3.patterns[0].bits.to_string() == "10");
    CHECK(dropped == std::vector<std::string>{"h1"});

    CHECK_THROWS_WITH_AS(binarize(ac, base, 6), "no nonzero pattern vectors", DataError);
    CHECK_THROWS_AS(binarize(ac, base, 0), std::invalid_argument);
}

TEST_CASE("host covering every base url saturates its vector") {
    AccessCounts ac = make_counts({{"h1", "/a", 1}, {"h1", "/b", 2}, {"h1", "/c", 1},
                                   {"h2", "/a", 1}});
    PatternMatrix m = binarize(ac, build_base_vector(ac, 1), 1);
    CHECK(m.patterns[0].bits.count() == m.n());
}

TEST_CASE("binarize is monotone in tau") {
    std::mt19937_64 rng(17);
    std::vector<std::tuple<std::string, std::string, int>> triples;
    for (int h = 0; h < 8; ++h)
        for (int u = 0; u < 10; ++u)
            if (rng() % 3) triples.push_back({"h" + std::to_string(h),
                                              "/u" + std::to_string(u),
                                              int(rng() % 5 + 1)});
    AccessCounts ac = make_counts(triples);
    BaseVector base = build_base_vector(ac, 1);
    for (std::uint64_t tau = 1; tau + 1 <= 5; ++tau) {
        PatternMatrix lo = binarize(ac, base, tau);
        PatternMatrix hi = binarize(ac, base, tau + 1);
        for (const auto& hp : hi.patterns) {
            const PatternVector* lp = nullptr;
            for (const auto& cand : lo.patterns)
                if (cand.host == hp.host) lp = &cand;
            REQUIRE(lp != nullptr);  // a host never reappears after being dropped
            for (std::size_t i = 0; i < hi.n(); ++i)
                if (hp.bits.test(i)) CHECK(lp->bits.test(i));
        }
    }
}

TEST_CASE("matrix file round trip is exact, with and without truth") {
    PlantedParams pp;
    pp.n = 21;
    pp.k = 3;
    pp.per_cluster = 4;
    pp.density = 0.4;
    pp.noise = 0.1;
    pp.seed = 11;
    PatternMatrix m = gen_planted(pp);
    const auto path = temp_file("wum_roundtrip.tsv");

    write_matrix_file(path.string(), m);
    PatternMatrix back = read_matrix_file(path.string());
    CHECK(back.base.urls == m.base.urls);
    REQUIRE(back.m() == m.m());
    for (std::size_t t = 0; t < m.m(); ++t) {
        CHECK(back.patterns[t].host == m.patterns[t].host);
        CHECK(back.patterns[t].bits == m.patterns[t].bits);
    }
    CHECK(back.ground_truth.size() == m.ground_truth.size());
    for (const auto& [h, c] : m.ground_truth) CHECK(back.ground_truth.at(h) == c);

    m.ground_truth.clear();
    write_matrix_file(path.string(), m);
    CHECK(read_matrix_file(path.string()).ground_truth.empty());
    std::filesystem::remove(path);
}

TEST_CASE("matrix parse errors carry line numbers") {
    const auto path = temp_file("wum_badmatrix.tsv");
    auto expect_error = [&](const std::string& text, const char* needle) {
        FILE* f = std::fopen(path.string().c_str(), "w");
        REQUIRE(f);
        std::fputs(text.c_str(), f);
        std::fclose(f);
        CAPTURE(text);
        try {
            read_matrix_file(path.string());
            FAIL_CHECK("expected DataError");
        } catch (const DataError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error("", "line 1");
    expect_error("2\n", "line 1");
    expect_error("x y\n", "line 1");
    expect_error("2 1\n/a\nh1\t10\n", "line 2");            // one url, header says two
    expect_error("2 2\n/a\t/b\nh1\t10\n", "line 4");        // fewer rows than promised
    expect_error("2 1\n/a\t/b\nh1\t101\n", "line 3");       // row width mismatch
    expect_error("2 1\n/a\t/b\nh1\t1x\n", "line 3");        // bad bit character
    expect_error("2 1\n/a\t/b\nh1\t00\n", "line 3");        // all-zero row
    expect_error("2 2\n/a\t/b\nh1\t10\nh1\t01\n", "line 4");  // duplicate host
    expect_error("2 1\n/a\t/b\nh1\t10\n#truth\nh9\t0\n", "line 5");  // unknown truth host
    expect_error("2 1\n/a\t/b\nh1\t10\n#truth\nh1\tx\n", "line 5");  // bad cluster id
    std::filesystem::remove(path);
}
