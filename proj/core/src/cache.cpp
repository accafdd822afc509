#include "umemura/cache.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>

#include "umemura/version.hpp"

namespace umemura {

std::string content_checksum(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    static const char* hex = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = hex[h & 0xf];
        h >>= 4;
    }
    buf[16] = '\0';
    return std::string(buf);
}

std::filesystem::path cache_directory() {
    if (const char* env = std::getenv("UMEMURA_CACHE"); env && *env)
        return std::filesystem::path(env);
    return std::filesystem::path("cache");
}

std::string cache_file_name(const CacheKey& key) {
    std::string mode = key.mu_mode;
    for (std::size_t pos; (pos = mode.find('/')) != std::string::npos;)
        mode.replace(pos, 1, "_over_");
    return key.family + "_" + std::to_string(key.n) + "_" + mode + ".json";
}

CacheEntry make_cache_entry(CacheKey key, BiPoly payload) {
    CacheEntry e;
    e.key = std::move(key);
    e.checksum = content_checksum(bipoly_canonical_dump(payload));
    e.payload = std::move(payload);
    e.tool_version = kToolVersion;
    return e;
}

Json cache_entry_to_json(const CacheEntry& e) {
    Json j;
    j["family"] = e.key.family;
    j["n"] = e.key.n;
    j["mu_mode"] = e.key.mu_mode;
    j["payload"] = bipoly_to_json(e.payload);
    j["checksum"] = e.checksum;
    j["tool_version"] = e.tool_version;
    return j;
}

CacheEntry cache_entry_from_json(const Json& j) {
    CacheEntry e;
    e.key.family = j.at("family").get<std::string>();
    e.key.n = j.at("n").get<int>();
    e.key.mu_mode = j.at("mu_mode").get<std::string>();
    e.payload = bipoly_from_json(j.at("payload"));
    e.checksum = j.at("checksum").get<std::string>();
    e.tool_version = j.at("tool_version").get<std::string>();
    return e;
}

std::filesystem::path write_cache_entry(const std::filesystem::path& dir,
                                        const CacheEntry& entry) {
    std::filesystem::create_directories(dir);
    std::filesystem::path target = dir / cache_file_name(entry.key);
    std::filesystem::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp);
        if (!f) throw IoError("cannot open " + tmp.string());
        f << cache_entry_to_json(entry).dump(2) << "\n";
        if (!f.good()) throw IoError("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
    return target;
}

std::optional<CacheEntry> read_cache_entry(const std::filesystem::path& dir,
                                           const CacheKey& key) {
    std::filesystem::path target = dir / cache_file_name(key);
    std::ifstream f(target);
    if (!f) return std::nullopt;
    Json j = Json::parse(f, nullptr, true);
    CacheEntry e = cache_entry_from_json(j);
    std::string recomputed = content_checksum(bipoly_canonical_dump(e.payload));
    if (recomputed != e.checksum)
        throw CacheCorruptError("checksum mismatch in " + target.string());
    return e;
}

}  // namespace umemura
