#include "mzv/value_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>

#include <json.hpp>

namespace mzv {

ValueCache::ValueCache(std::filesystem::path path) : path_(std::move(path)) {
  if (path_.empty() || !std::filesystem::exists(path_)) return;
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto record = nlohmann::json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.contains("index")) continue;
    values_[{Index::parse(record["index"].get<std::string>()), record["precision"].get<int>()}] =
        record["value"].get<std::string>();
  }
}

std::filesystem::path ValueCache::default_path() {
  const char* env = std::getenv("MZV_CACHE_PATH");
  return env ? std::filesystem::path(env) : std::filesystem::path();
}

std::optional<std::string> ValueCache::lookup(const Index& k, int digits) const {
  std::shared_lock lock(mutex_);
  auto it = values_.find({k, digits});
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void ValueCache::store(const Index& k, int digits, const std::string& value) {
  std::unique_lock lock(mutex_);
  auto [_, inserted] = values_.try_emplace({k, digits}, value);
  if (!inserted || path_.empty()) return;
  std::ofstream out(path_, std::ios::app);
  nlohmann::json record = {{"index", k.to_string()}, {"precision", digits}, {"value", value}};
  out << record.dump() << '\n';
}

std::size_t ValueCache::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

}  // namespace mzv
