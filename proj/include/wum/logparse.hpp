#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wum {

// One parsed access-log record. The timestamp is kept verbatim; nothing
// downstream interprets it.
struct LogRecord {
    std::string host;
    std::string timestamp;
    std::string method;
    std::string url;
    int status = 0;
    std::optional<std::uint64_t> bytes;
};

// Which records survive aggregation. A methods entry of "*" keeps all
// methods.
struct RecordFilter {
    std::vector<std::string> methods = {"GET"};
    int max_status = 399;
    std::vector<std::string> blocked_extensions;

    bool keeps(const LogRecord& rec) const;
};

// Per-host URL access counts, the precursor of the feature stage.
struct AccessCounts {
    std::map<std::pair<std::string, std::string>, std::uint64_t> counts;
    std::vector<std::string> hosts;
    std::vector<std::string> urls;

    // Pointwise sum; used to combine partial aggregations.
    void merge(const AccessCounts& other);
};

// Running totals reported after ingesting a log stream.
struct ParseStats {
    std::uint64_t lines = 0;
    std::uint64_t parsed = 0;
    std::uint64_t skipped = 0;
};

// Parses one Common Log Format line (Combined-format trailers ignored).
// Returns std::nullopt for anything malformed; never throws.
std::optional<LogRecord> parse_log_line(const std::string& line);

// Counts retained records per (host, url). Throws DataError if the filter
// leaves nothing.
AccessCounts aggregate(const std::vector<LogRecord>& records, const RecordFilter& filter);

}  // namespace wum
