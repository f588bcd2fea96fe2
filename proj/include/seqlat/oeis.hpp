#pragma once

#include "seqlat/bigint.hpp"
#include "seqlat/errors.hpp"

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace seqlat::oeis {

struct BFileEntry {
    long index;
    Int value;

    bool operator==(const BFileEntry&) const = default;
};

enum class Source { Network, Cache };

struct BFileRecord {
    std::string id;
    std::vector<BFileEntry> entries;
    Source source = Source::Cache;
    std::chrono::system_clock::time_point fetched_at;
};

struct FetchOptions {
    // Defaults come from OEIS_BASE_URL and SEQLAT_CACHE_DIR.
    std::string base_url;
    std::filesystem::path cache_dir;
    bool allow_network = true;
    std::chrono::seconds timeout{10};
};

std::string default_base_url();
std::filesystem::path default_cache_dir();

/// b-file relative path for an id, e.g. "A026770" -> "/A026770/b026770.txt".
std::string bfile_path(const std::string& id);

/// Parse a b-file body: "index value" lines, '#' comments and blank lines
/// ignored, indices consecutive. Throws ParseFailed on anything else.
std::vector<BFileEntry> parse_bfile(std::string_view text);

/// Fetch a b-file over HTTP, caching the raw body; on network failure with
/// a warm cache, serve the cached copy. Throws FetchFailed when neither is
/// available, ParseFailed on a malformed body.
BFileRecord fetch_bfile(const std::string& id, const FetchOptions& options = {});

struct DiffReport {
    struct Mismatch {
        long index;
        Int expected;  // b-file value
        Int actual;    // computed value
    };

    std::string id;
    std::size_t compared = 0;
    std::optional<Mismatch> first_mismatch;
    long offset_used = 0;

    bool ok() const { return !first_mismatch.has_value(); }
};

/// Align computed[0] with b-file index lead_offset and compare as many
/// terms as both sides provide. Throws OffsetNotInBFile when the offset is
/// outside the b-file's index range.
DiffReport compare(const std::string& id, const std::vector<Int>& computed,
                   const BFileRecord& bfile, long lead_offset);

} // namespace seqlat::oeis
