#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "plethysm/json_io.hpp"

namespace plethysm::cli {

inline constexpr const char* kCacheSchema = "plethysm-cache-1";

// Content-addressed JSON results on disk. Files are written to a temporary
// name and renamed into place, so concurrent writers never expose partial
// files. Unreadable or stale entries count as misses.
class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path dir);

  // PLETHYSM_CACHE_DIR, else $XDG_CACHE_HOME/plethysm, else ~/.cache/plethysm.
  static std::optional<std::filesystem::path> default_directory();

  std::optional<Json> load(const std::string& key) const;
  void save(const std::string& key, const Json& value) const;

  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

// Hooks a cache into the engine's plethysm expansions.
void attach(PlethysmEngine& engine, const DiskCache& cache);

}  // namespace plethysm::cli
