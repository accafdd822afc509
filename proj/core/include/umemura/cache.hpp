#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "umemura/json_io.hpp"

namespace umemura {

class CacheCorruptError : public MathError {
public:
    using MathError::MathError;
};

struct CacheKey {
    std::string family;
    int n = 0;
    std::string mu_mode;
};

// One cached polynomial.  The checksum covers the canonical payload bytes,
// so a cache hit is byte-identical to regeneration by construction.
struct CacheEntry {
    CacheKey key;
    BiPoly payload;
    std::string checksum;
    std::string tool_version;
};

// 64-bit FNV-1a, lower-case hex.
std::string content_checksum(std::string_view bytes);

// $UMEMURA_CACHE when set, otherwise ./cache.
std::filesystem::path cache_directory();

// <family>_<n>_<muMode>.json; '/' in rational mu modes becomes "_over_".
std::string cache_file_name(const CacheKey& key);

CacheEntry make_cache_entry(CacheKey key, BiPoly payload);
Json cache_entry_to_json(const CacheEntry& e);
CacheEntry cache_entry_from_json(const Json& j);

// Writes to a temporary file in the same directory, then renames; concurrent
// readers never observe a partial entry.
std::filesystem::path write_cache_entry(const std::filesystem::path& dir,
                                        const CacheEntry& entry);
// Verifies the stored checksum; throws CacheCorruptError on mismatch.
std::optional<CacheEntry> read_cache_entry(const std::filesystem::path& dir,
                                           const CacheKey& key);

}  // namespace umemura
