#include "wum/logparse.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "wum/errors.hpp"

namespace wum {

namespace {

// Splits off the next whitespace-delimited token starting at pos.
// Returns nullopt when the line is exhausted.
std::optional<std::string> next_token(const std::string& line, std::size_t& pos) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) return std::nullopt;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    return line.substr(start, pos - start);
}

bool parse_status(const std::string& tok, int& out) {
    if (tok.empty() || tok.size() > 3) return false;
    int value = 0;
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        value = value * 10 + (c - '0');
    }
    if (value < 100 || value > 599) return false;
    out = value;
    return true;
}

bool parse_bytes(const std::string& tok, std::optional<std::uint64_t>& out) {
    if (tok == "-") {
        out.reset();
        return true;
    }
    if (tok.empty()) return false;
    std::uint64_t value = 0;
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        if (value > (~std::uint64_t{0} - (c - '0')) / 10) return false;
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
    }
    out = value;
    return true;
}

}  // namespace

std::optional<LogRecord> parse_log_line(const std::string& line) {
    std::size_t pos = 0;
    LogRecord rec;

    auto host = next_token(line, pos);
    if (!host || host->empty()) return std::nullopt;
    rec.host = *host;

    if (!next_token(line, pos)) return std::nullopt;  // ident
    if (!next_token(line, pos)) return std::nullopt;  // authuser

    // Bracketed timestamp, may contain spaces.
    while (pos < line.size() && line[pos] == ' ') ++pos;
    if (pos >= line.size() || line[pos] != '[') return std::nullopt;
    const std::size_t ts_end = line.find(']', pos + 1);
    if (ts_end == std::string::npos) return std::nullopt;
    rec.timestamp = line.substr(pos + 1, ts_end - pos - 1);
    pos = ts_end + 1;

    // Quoted request: exactly METHOD SP url SP PROTO.
    while (pos < line.size() && line[pos] == ' ') ++pos;
    if (pos >= line.size() || line[pos] != '"') return std::nullopt;
    const std::size_t req_end = line.find('"', pos + 1);
    if (req_end == std::string::npos) return std::nullopt;
    const std::string request = line.substr(pos + 1, req_end - pos - 1);
    pos = req_end + 1;

    std::size_t rpos = 0;
    auto method = next_token(request, rpos);
    auto url = next_token(request, rpos);
    auto proto = next_token(request, rpos);
    if (!method || !url || !proto || next_token(request, rpos)) return std::nullopt;
    rec.method = *method;
    rec.url = url->substr(0, url->find('?'));
    if (rec.url.empty()) return std::nullopt;

    auto status_tok = next_token(line, pos);
    if (!status_tok || !parse_status(*status_tok, rec.status)) return std::nullopt;

    auto bytes_tok = next_token(line, pos);
    if (!bytes_tok || !parse_bytes(*bytes_tok, rec.bytes)) return std::nullopt;

    // Anything after bytes (Combined-format referer/agent) is ignored.
    return rec;
}

bool RecordFilter::keeps(const LogRecord& rec) const {
    if (rec.status > max_status) return false;
    bool method_ok = false;
    for (const auto& m : methods) {
        if (m == "*" || m == rec.method) {
            method_ok = true;
            break;
        }
    }
    if (!method_ok) return false;
    for (const auto& ext : blocked_extensions) {
        if (rec.url.size() >= ext.size() &&
            rec.url.compare(rec.url.size() - ext.size(), ext.size(), ext) == 0) {
            return false;
        }
    }
    return true;
}

void AccessCounts::merge(const AccessCounts& other) {
    for (const auto& [key, n] : other.counts) counts[key] += n;
    hosts.clear();
    urls.clear();
    std::set<std::string> host_set, url_set;
    for (const auto& [key, n] : counts) {
        (void)n;
        host_set.insert(key.first);
        url_set.insert(key.second);
    }
    hosts.assign(host_set.begin(), host_set.end());
    urls.assign(url_set.begin(), url_set.end());
}

AccessCounts aggregate(const std::vector<LogRecord>& records, const RecordFilter& filter) {
    AccessCounts out;
    std::set<std::string> host_set, url_set;
    for (const auto& rec : records) {
        if (!filter.keeps(rec)) continue;
        ++out.counts[{rec.host, rec.url}];
        host_set.insert(rec.host);
        url_set.insert(rec.url);
    }
    if (out.counts.empty()) throw DataError("empty log after filtering");
    out.hosts.assign(host_set.begin(), host_set.end());
    out.urls.assign(url_set.begin(), url_set.end());
    return out;
}

}  // namespace wum
