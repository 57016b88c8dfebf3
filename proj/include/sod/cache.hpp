#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace sod {

inline constexpr const char* kSchemaVersion = "1.0";

/// File-backed cache of computation results. Entries are keyed by the
/// canonical text of the request (operation, context, weights), so they
/// survive refactors of the in-memory types. Writes go through a
/// temp-file-plus-rename so concurrent readers never see a torn entry.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }

    /// Returns the stored value, or nothing when the entry is absent,
    /// carries a different schema version, or cannot be parsed (a warning
    /// is printed for corrupt files; the caller recomputes and overwrites).
    std::optional<nlohmann::json> get(const std::string& key) const;

    void put(const std::string& key, const nlohmann::json& value) const;

private:
    std::filesystem::path path_for(const std::string& key) const;

    std::filesystem::path dir_;
};

/// Looks the key up in `cache` (which may be null, disabling caching);
/// on a miss runs `compute`, stores the serialized value and returns it.
template <class Compute, class ToJson, class FromJson>
auto cache_get_or_compute(const ResultCache* cache, const std::string& key, Compute&& compute,
                          ToJson&& to_json, FromJson&& from_json)
{
    if (cache) {
        if (auto stored = cache->get(key))
            return from_json(*stored);
    }
    auto value = compute();
    if (cache)
        cache->put(key, to_json(value));
    return value;
}

}  // namespace sod
