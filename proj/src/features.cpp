#include "wum/features.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "wum/errors.hpp"

namespace wum {

BaseVector build_base_vector(const AccessCounts& counts, std::size_t min_url_support) {
    if (counts.counts.empty()) throw DataError("no URLs meet support threshold");
    std::map<std::string, std::set<std::string>> hosts_per_url;
    for (const auto& [key, n] : counts.counts) {
        (void)n;
        hosts_per_url[key.second].insert(key.first);
    }
    BaseVector base;
    for (const auto& [url, hosts] : hosts_per_url) {
        if (hosts.size() >= min_url_support) base.urls.push_back(url);
    }
    if (base.urls.empty()) throw DataError("no URLs meet support threshold");
    return base;
}

PatternMatrix binarize(const AccessCounts& counts, const BaseVector& base, std::uint64_t tau,
                       std::vector<std::string>* dropped) {
    if (tau == 0) throw std::invalid_argument("tau must be positive");
    std::map<std::string, std::size_t> url_index;
    for (std::size_t i = 0; i < base.urls.size(); ++i) url_index[base.urls[i]] = i;

    PatternMatrix matrix;
    matrix.base = base;
    for (const auto& host : counts.hosts) {
        PatternVector pv;
        pv.host = host;
        pv.bits = BitVector(base.size());
        for (const auto& [key, n] : counts.counts) {
            if (key.first != host || n < tau) continue;
            auto it = url_index.find(key.second);
            if (it != url_index.end()) pv.bits.set(it->second);
        }
        if (pv.bits.any()) {
            matrix.patterns.push_back(std::move(pv));
        } else if (dropped) {
            dropped->push_back(host);
        }
    }
    if (matrix.patterns.empty()) throw DataError("no nonzero pattern vectors");
    return matrix;
}

void write_matrix(std::ostream& out, const PatternMatrix& matrix) {
    out << matrix.n() << ' ' << matrix.m() << '\n';
    for (std::size_t i = 0; i < matrix.base.urls.size(); ++i) {
        if (i) out << '\t';
        out << matrix.base.urls[i];
    }
    out << '\n';
    for (const auto& pv : matrix.patterns) {
        out << pv.host << '\t' << pv.bits.to_string() << '\n';
    }
    if (!matrix.ground_truth.empty()) {
        out << "#truth\n";
        std::vector<std::string> truth_hosts;
        truth_hosts.reserve(matrix.ground_truth.size());
        for (const auto& [host, cluster] : matrix.ground_truth) {
            (void)cluster;
            truth_hosts.push_back(host);
        }
        std::sort(truth_hosts.begin(), truth_hosts.end());
        for (const auto& host : truth_hosts) {
            out << host << '\t' << matrix.ground_truth.at(host) << '\n';
        }
    }
}

void write_matrix_file(const std::string& path, const PatternMatrix& matrix) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot open for writing: " + path);
    write_matrix(out, matrix);
    if (!out) throw DataError("write failed: " + path);
}

namespace {

[[noreturn]] void fail_at(std::size_t line_no, const std::string& what) {
    throw DataError("matrix parse error at line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

PatternMatrix read_matrix(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    auto read_line = [&](std::string& dest) {
        if (!std::getline(in, dest)) return false;
        if (!dest.empty() && dest.back() == '\r') dest.pop_back();
        ++line_no;
        return true;
    };

    if (!read_line(line)) fail_at(1, "missing header");
    std::istringstream header(line);
    std::size_t n = 0, m = 0;
    if (!(header >> n >> m) || n == 0) fail_at(line_no, "expected header 'n m' with n >= 1");
    std::string extra;
    if (header >> extra) fail_at(line_no, "trailing content after header");

    PatternMatrix matrix;
    if (!read_line(line)) fail_at(line_no + 1, "missing URL row");
    std::size_t start = 0;
    while (true) {
        const std::size_t tab = line.find('\t', start);
        matrix.base.urls.push_back(line.substr(start, tab - start));
        if (tab == std::string::npos) break;
        start = tab + 1;
    }
    if (matrix.base.urls.size() != n) fail_at(line_no, "URL row width does not match header n");
    for (const auto& url : matrix.base.urls) {
        if (url.empty()) fail_at(line_no, "empty URL entry");
    }

    std::set<std::string> seen_hosts;
    for (std::size_t i = 0; i < m; ++i) {
        if (!read_line(line)) fail_at(line_no + 1, "missing pattern row");
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos || tab == 0) fail_at(line_no, "expected 'host<TAB>bits'");
        PatternVector pv;
        pv.host = line.substr(0, tab);
        const std::string bits = line.substr(tab + 1);
        if (bits.size() != n) fail_at(line_no, "bit row width does not match header n");
        try {
            pv.bits = BitVector::from_string(bits);
        } catch (const std::invalid_argument&) {
            fail_at(line_no, "bits must be '0' or '1'");
        }
        if (!pv.bits.any()) fail_at(line_no, "all-zero pattern vector");
        if (!seen_hosts.insert(pv.host).second) fail_at(line_no, "duplicate host label");
        matrix.patterns.push_back(std::move(pv));
    }
    if (matrix.patterns.empty()) fail_at(line_no, "no nonzero pattern vectors");

    if (read_line(line)) {
        if (line != "#truth") fail_at(line_no, "expected '#truth' or end of file");
        while (read_line(line)) {
            if (line.empty()) continue;
            const std::size_t tab = line.find('\t');
            if (tab == std::string::npos || tab == 0) fail_at(line_no, "expected 'host<TAB>cluster-id'");
            const std::string host = line.substr(0, tab);
            if (!seen_hosts.count(host)) fail_at(line_no, "truth label for unknown host");
            try {
                matrix.ground_truth[host] = std::stoi(line.substr(tab + 1));
            } catch (const std::exception&) {
                fail_at(line_no, "cluster-id must be an integer");
            }
        }
    }
    return matrix;
}

PatternMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open: " + path);
    return read_matrix(in);
}

}  // namespace wum
