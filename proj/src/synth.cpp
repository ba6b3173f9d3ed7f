#include "wum/synth.hpp"

#include <algorithm>
#include <cstdio>

#include "wum/errors.hpp"
#include "wum/rng.hpp"

namespace wum {

namespace {

constexpr int kMaxRetries = 1000;

std::string label(char prefix, std::size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%c%05zu", prefix, i);
    return buf;
}

double jaccard(const BitVector& a, const BitVector& b) {
    const std::size_t u = BitVector::or_count(a, b);
    if (u == 0) return 0.0;
    return static_cast<double>(BitVector::and_count(a, b)) / static_cast<double>(u);
}

BitVector draw_prototype(Rng& rng, std::size_t n, double density,
                         const std::vector<BitVector>& existing, double max_overlap) {
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        BitVector proto(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (rng.bernoulli(density)) proto.set(i);
        }
        if (!proto.any()) continue;
        bool ok = true;
        for (const auto& other : existing) {
            if (jaccard(proto, other) >= max_overlap) {
                ok = false;
                break;
            }
        }
        if (ok) return proto;
    }
    throw DataError("prototype overlap constraint unsatisfiable within retry budget");
}

BitVector draw_member(Rng& rng, const BitVector& proto, double noise) {
    const std::size_t n = proto.size();
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        BitVector member = proto;
        for (std::size_t i = 0; i < n; ++i) {
            if (rng.bernoulli(noise)) member.flip(i);
        }
        if (member.any()) return member;
    }
    throw DataError("could not draw a nonzero member within retry budget");
}

}  // namespace

void PlantedParams::validate() const {
    if (n == 0 || k == 0 || per_cluster == 0) {
        throw std::invalid_argument("n, k, and per_cluster must be positive");
    }
    if (!(density > 0.0 && density < 1.0)) throw std::invalid_argument("density must be in (0,1)");
    if (!(noise >= 0.0 && noise < 0.5)) throw std::invalid_argument("noise must be in [0,0.5)");
    if (!(max_overlap > 0.0 && max_overlap <= 1.0)) {
        throw std::invalid_argument("max_overlap must be in (0,1]");
    }
    if (density * static_cast<double>(n) * static_cast<double>(k) < 1.0) {
        throw std::invalid_argument("expected prototype mass below one bit");
    }
}

PatternMatrix gen_planted_sizes(std::size_t n, const std::vector<std::size_t>& sizes,
                                double density, double noise, double max_overlap,
                                std::uint64_t seed) {
    Rng rng(seed);
    std::vector<BitVector> prototypes;
    prototypes.reserve(sizes.size());
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        prototypes.push_back(draw_prototype(rng, n, density, prototypes, max_overlap));
    }

    PatternMatrix matrix;
    matrix.base.urls.reserve(n);
    for (std::size_t i = 0; i < n; ++i) matrix.base.urls.push_back("/" + label('u', i));

    std::size_t host_index = 0;
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        for (std::size_t s = 0; s < sizes[c]; ++s) {
            PatternVector pv;
            pv.host = label('h', host_index++);
            pv.bits = draw_member(rng, prototypes[c], noise);
            matrix.ground_truth[pv.host] = static_cast<int>(c);
            matrix.patterns.push_back(std::move(pv));
        }
    }
    return matrix;
}

PatternMatrix gen_planted(const PlantedParams& params) {
    params.validate();
    return gen_planted_sizes(params.n, std::vector<std::size_t>(params.k, params.per_cluster),
                             params.density, params.noise, params.max_overlap, params.seed);
}

void LogGenParams::validate() const {
    if (hosts == 0 || urls == 0 || k == 0) {
        throw std::invalid_argument("hosts, urls, and k must be positive");
    }
    if (hosts < k) throw std::invalid_argument("hosts must be at least k");
    PlantedParams probe;
    probe.n = urls;
    probe.k = k;
    probe.per_cluster = (hosts + k - 1) / k;
    probe.density = density;
    probe.noise = noise;
    probe.max_overlap = max_overlap;
    probe.seed = seed;
    probe.validate();
}

namespace {

// 01/Jan/2024:00:00:00 +0000 advanced by `offset` seconds, day wrapping
// inside January.
std::string timestamp(std::size_t offset) {
    const std::size_t day = (offset / 86400) % 28;
    const std::size_t rem = offset % 86400;
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%02zu/Jan/2024:%02zu:%02zu:%02zu +0000", 1 + day,
                  rem / 3600, (rem / 60) % 60, rem % 60);
    return buf;
}

}  // namespace

GeneratedLog gen_log(const LogGenParams& params) {
    params.validate();

    std::vector<std::size_t> sizes(params.k, params.hosts / params.k);
    for (std::size_t c = 0; c < params.hosts % params.k; ++c) ++sizes[c];

    GeneratedLog out;
    PatternMatrix planted = gen_planted_sizes(params.urls, sizes, params.density, params.noise,
                                              params.max_overlap, params.seed);

    // Planting consumed its own stream inside gen_planted_sizes, so the
    // matrix is identical to gen_planted's at equal sizes; line counts,
    // byte sizes, and the shuffle come from an independent stream.
    Rng rng(params.seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<std::string> lines;
    for (const auto& pv : planted.patterns) {
        for (std::size_t i = 0; i < params.urls; ++i) {
            if (!pv.bits.test(i)) continue;
            const std::size_t copies = 1 + rng.below(3);
            for (std::size_t c = 0; c < copies; ++c) {
                const std::uint64_t bytes = 100 + rng.below(9900);
                lines.push_back(pv.host + " - - [" + timestamp(lines.size()) + "] \"GET " +
                                planted.base.urls[i] + " HTTP/1.0\" 200 " + std::to_string(bytes));
            }
        }
    }
    for (std::size_t i = lines.size(); i > 1; --i) {
        std::swap(lines[i - 1], lines[rng.below(i)]);
    }

    std::string text;
    for (const auto& line : lines) {
        text += line;
        text += '\n';
    }
    out.text = std::move(text);

    // Ingestion only sees URLs someone accessed; drop untouched columns.
    BitVector touched(params.urls);
    for (const auto& pv : planted.patterns) {
        for (std::size_t i = 0; i < params.urls; ++i) {
            if (pv.bits.test(i)) touched.set(i);
        }
    }
    if (touched.count() == params.urls) {
        out.expected = std::move(planted);
        return out;
    }
    PatternMatrix reduced;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < params.urls; ++i) {
        if (touched.test(i)) {
            keep.push_back(i);
            reduced.base.urls.push_back(planted.base.urls[i]);
        }
    }
    for (const auto& pv : planted.patterns) {
        PatternVector rv;
        rv.host = pv.host;
        rv.bits = BitVector(keep.size());
        for (std::size_t j = 0; j < keep.size(); ++j) {
            if (pv.bits.test(keep[j])) rv.bits.set(j);
        }
        reduced.patterns.push_back(std::move(rv));
    }
    reduced.ground_truth = planted.ground_truth;
    out.expected = std::move(reduced);
    return out;
}

}  // namespace wum
