#include "sod/cache.hpp"

#include <atomic>
#include <unistd.h>
#include <fstream>
#include <iostream>
#include <sstream>

namespace sod {

namespace {

std::string fnv1a_hex(const std::string& s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir))
{
    std::filesystem::create_directories(dir_);
}

std::filesystem::path ResultCache::path_for(const std::string& key) const
{
    // The hash only addresses the file; the key inside it is authoritative.
    return dir_ / (fnv1a_hex(key) + ".json");
}

std::optional<nlohmann::json> ResultCache::get(const std::string& key) const
{
    const auto path = path_for(key);
    std::ifstream in(path);
    if (!in)
        return std::nullopt;
    nlohmann::json entry;
    try {
        in >> entry;
        if (!entry.is_object() || !entry.contains("key") || !entry.contains("value") ||
            !entry.contains("schemaVersion"))
            throw std::runtime_error("missing fields");
    }
    catch (const std::exception& e) {
        std::cerr << "warning: corrupt cache entry " << path.string() << " (" << e.what()
                  << "); recomputing\n";
        return std::nullopt;
    }
    if (entry["schemaVersion"] != kSchemaVersion || entry["key"] != key)
        return std::nullopt;
    return entry["value"];
}

void ResultCache::put(const std::string& key, const nlohmann::json& value) const
{
    nlohmann::json entry;
    entry["schemaVersion"] = kSchemaVersion;
    entry["key"] = key;
    entry["value"] = value;

    static std::atomic<unsigned long long> counter{0};
    const auto path = path_for(key);
    const auto tmp = path.string() + "." + std::to_string(::getpid()) + "-" +
                     std::to_string(counter.fetch_add(1)) + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            return;  // unwritable cache degrades to plain computation
        out << entry.dump() << '\n';
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        std::filesystem::remove(tmp, ec);
}

}  // namespace sod
