#include "wum/clustering.hpp"

#include <algorithm>
#include <fstream>

#include "wum/errors.hpp"

namespace wum {

std::vector<std::size_t> cluster_sizes(const Clustering& c) {
    std::vector<std::size_t> sizes(c.prototypes.size(), 0);
    for (const auto& [host, cluster] : c.assignments) {
        (void)host;
        if (cluster >= 0 && static_cast<std::size_t>(cluster) < sizes.size()) ++sizes[cluster];
    }
    return sizes;
}

void write_assignments_file(const std::string& path, const Clustering& c) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot open for writing: " + path);
    std::vector<std::string> hosts;
    hosts.reserve(c.assignments.size());
    for (const auto& [host, cluster] : c.assignments) {
        (void)cluster;
        hosts.push_back(host);
    }
    std::sort(hosts.begin(), hosts.end());
    out << "host,cluster\n";
    for (const auto& host : hosts) {
        out << host << ',' << c.assignments.at(host) << '\n';
    }
    if (!out) throw DataError("write failed: " + path);
}

std::unordered_map<std::string, int> read_assignments_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open: " + path);
    std::unordered_map<std::string, int> assignments;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        ++line_no;
        if (line_no == 1 && line == "host,cluster") continue;
        if (line.empty()) continue;
        const std::size_t comma = line.rfind(',');
        if (comma == std::string::npos || comma == 0) {
            throw DataError("assignments parse error at line " + std::to_string(line_no));
        }
        try {
            assignments[line.substr(0, comma)] = std::stoi(line.substr(comma + 1));
        } catch (const std::exception&) {
            throw DataError("assignments parse error at line " + std::to_string(line_no));
        }
    }
    if (assignments.empty()) throw DataError("no assignments in " + path);
    return assignments;
}

}  // namespace wum
