#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace smoothsum {

inline constexpr const char* kCacheEnvVar = "SMOOTHSUM_CACHE_DIR";

/// Directory named by SMOOTHSUM_CACHE_DIR, if set and non-empty.
std::optional<std::filesystem::path> cache_dir();

/// Contents of a cache entry, or nullopt when caching is off or the entry is
/// missing.
std::optional<std::string> cache_load(const std::string& name);

/// Writes an entry atomically (temp file + rename). Silently does nothing
/// when caching is off or the directory is not writable.
void cache_store(const std::string& name, const std::string& contents);

}  // namespace smoothsum
