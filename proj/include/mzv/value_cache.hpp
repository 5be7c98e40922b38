#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>

#include "mzv/index.hpp"

namespace mzv {

/// Persistent map (index, digits) -> decimal string, stored as JSON lines
/// {"index": "(1,2)", "precision": 60, "value": "..."}. Reads are concurrent,
/// writes are serialized and appended to the backing file.
class ValueCache {
 public:
  /// Loads the file if it exists. An empty path gives an in-memory cache.
  explicit ValueCache(std::filesystem::path path = {});

  /// Path from MZV_CACHE_PATH, or empty when unset.
  static std::filesystem::path default_path();

  std::optional<std::string> lookup(const Index& k, int digits) const;
  void store(const Index& k, int digits, const std::string& value);
  std::size_t size() const;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  mutable std::shared_mutex mutex_;
  std::map<std::pair<Index, int>, std::string> values_;
};

}  // namespace mzv
