#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "wum/bitvec.hpp"
#include "wum/logparse.hpp"

namespace wum {

// The ordered URL feature space: index i of every pattern refers to urls[i].
struct BaseVector {
    std::vector<std::string> urls;

    std::size_t size() const { return urls.size(); }
};

// One host's binary access pattern over the base vector.
struct PatternVector {
    std::string host;
    BitVector bits;
};

struct PatternMatrix {
    BaseVector base;
    std::vector<PatternVector> patterns;
    std::unordered_map<std::string, int> ground_truth;  // empty unless synthetic

    std::size_t n() const { return base.size(); }
    std::size_t m() const { return patterns.size(); }
};

// URLs accessed by at least min_url_support distinct hosts, sorted.
// Throws DataError when nothing qualifies.
BaseVector build_base_vector(const AccessCounts& counts, std::size_t min_url_support = 1);

// bit i = 1 iff the host accessed base.urls[i] at least tau times. Hosts
// whose vector comes out all-zero are dropped; their labels are appended to
// *dropped when provided. Throws DataError if every host is dropped.
PatternMatrix binarize(const AccessCounts& counts, const BaseVector& base, std::uint64_t tau = 1,
                       std::vector<std::string>* dropped = nullptr);

// Text serialization: header `n m`, the URL row, one `host<TAB>bits` line per
// pattern, then an optional `#truth` section. read_matrix throws DataError
// with a line number on any malformed input.
void write_matrix(std::ostream& out, const PatternMatrix& matrix);
void write_matrix_file(const std::string& path, const PatternMatrix& matrix);
PatternMatrix read_matrix(std::istream& in);
PatternMatrix read_matrix_file(const std::string& path);

}  // namespace wum
