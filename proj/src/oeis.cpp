#include "seqlat/oeis.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace seqlat::oeis {

namespace {

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v && *v ? std::string(v) : fallback;
}

bool is_integer_token(const std::string& tok) {
    if (tok.empty()) return false;
    std::size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    return true;
}

std::string digits_of(const std::string& id) {
    if (id.size() < 2 || id[0] != 'A')
        throw FetchFailed("malformed OEIS id: " + id);
    return id.substr(1);
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const std::string& id) {
    return dir / ("b" + digits_of(id) + ".txt");
}

// write-temp-then-rename, so concurrent readers never see a partial file
void write_cache(const std::filesystem::path& dir, const std::string& id,
                 const std::string& body) {
    std::filesystem::create_directories(dir);
    const auto target = cache_file(dir, id);
    const auto tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        out << body;
    }
    std::filesystem::rename(tmp, target);
}

std::optional<std::string> read_cache(const std::filesystem::path& dir,
                                      const std::string& id) {
    std::ifstream in(cache_file(dir, id), std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream body;
    body << in.rdbuf();
    return body.str();
}

} // namespace

std::string default_base_url() {
    return env_or("OEIS_BASE_URL", "https://oeis.org");
}

std::filesystem::path default_cache_dir() {
    if (const char* v = std::getenv("SEQLAT_CACHE_DIR"); v && *v) return v;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "seqlat";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "seqlat";
    return std::filesystem::temp_directory_path() / "seqlat-cache";
}

std::string bfile_path(const std::string& id) {
    return "/" + id + "/b" + digits_of(id) + ".txt";
}

std::vector<BFileEntry> parse_bfile(std::string_view text) {
    std::vector<BFileEntry> entries;
    std::istringstream stream{std::string(text)};
    std::string line;
    long line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first) || first[0] == '#') continue;
        std::string second, extra;
        if (!(fields >> second) || (fields >> extra))
            throw ParseFailed("line " + std::to_string(line_no) +
                              ": expected exactly two fields");
        if (!is_integer_token(first) || !is_integer_token(second))
            throw ParseFailed("line " + std::to_string(line_no) + ": non-integer token");
        BFileEntry entry{std::stol(first), Int(second)};
        if (!entries.empty() && entry.index != entries.back().index + 1)
            throw ParseFailed("line " + std::to_string(line_no) + ": index gap (" +
                              std::to_string(entries.back().index) + " -> " +
                              std::to_string(entry.index) + ")");
        entries.push_back(std::move(entry));
    }
    return entries;
}

BFileRecord fetch_bfile(const std::string& id, const FetchOptions& options) {
    const std::string base_url =
        options.base_url.empty() ? default_base_url() : options.base_url;
    const std::filesystem::path cache_dir =
        options.cache_dir.empty() ? default_cache_dir() : options.cache_dir;

    BFileRecord record;
    record.id = id;
    record.fetched_at = std::chrono::system_clock::now();

    std::string network_error;
    if (options.allow_network) {
        httplib::Client client(base_url);
        client.set_connection_timeout(options.timeout.count(), 0);
        client.set_read_timeout(options.timeout.count(), 0);
        client.set_follow_location(true);
        const std::string path = bfile_path(id);
        // single retry on transport-level failure
        for (int attempt = 0; attempt < 2; ++attempt) {
            auto res = client.Get(path);
            if (res) {
                if (res->status == 200) {
                    write_cache(cache_dir, id, res->body);
                    record.entries = parse_bfile(res->body);
                    record.source = Source::Network;
                    return record;
                }
                throw FetchFailed(id + ": HTTP " + std::to_string(res->status) +
                                  " from " + base_url + path);
            }
            network_error = httplib::to_string(res.error());
        }
    } else {
        network_error = "network disabled";
    }

    if (auto body = read_cache(cache_dir, id)) {
        record.entries = parse_bfile(*body);
        record.source = Source::Cache;
        return record;
    }
    throw FetchFailed(id + ": " + network_error + ", and no cached copy in " +
                      cache_dir.string());
}

DiffReport compare(const std::string& id, const std::vector<Int>& computed,
                   const BFileRecord& bfile, long lead_offset) {
    DiffReport report;
    report.id = id;
    report.offset_used = lead_offset;
    if (bfile.entries.empty())
        throw OffsetNotInBFile(id + ": b-file is empty");
    const long first = bfile.entries.front().index;
    const long last = bfile.entries.back().index;
    if (lead_offset < first || lead_offset > last)
        throw OffsetNotInBFile(id + ": offset " + std::to_string(lead_offset) +
                               " outside b-file range [" + std::to_string(first) +
                               ", " + std::to_string(last) + "]");
    const std::size_t start = static_cast<std::size_t>(lead_offset - first);
    const std::size_t n = std::min(computed.size(), bfile.entries.size() - start);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& entry = bfile.entries[start + i];
        ++report.compared;
        if (entry.value != computed[i]) {
            report.first_mismatch = DiffReport::Mismatch{entry.index, entry.value, computed[i]};
            break;
        }
    }
    return report;
}

} // namespace seqlat::oeis
