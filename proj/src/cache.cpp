#include "sgspectra/cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

#include <json.hpp>

namespace spectra {

namespace fs = std::filesystem;

CachePolicy parse_cache_policy(const std::string& text) {
  if (text == "use") return CachePolicy::kUse;
  if (text == "refresh") return CachePolicy::kRefresh;
  if (text == "off") return CachePolicy::kOff;
  throw std::invalid_argument("cache policy must be use, refresh or off; got '" +
                              text + "'");
}

std::string JobDescriptor::canonical() const {
  nlohmann::json doc;  // std::map backing keeps keys sorted
  doc["command"] = command;
  doc["params"] = params;
  return doc.dump();
}

std::string JobDescriptor::cache_key() const {
  // FNV-1a, 64-bit
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

ResultCache::ResultCache(std::string dir) : dir_(std::move(dir)) {}

ResultCache ResultCache::from_environment() {
  const char* env = std::getenv("SPECTRA_CACHE_DIR");
  return ResultCache(env && *env ? env : ".spectra-cache");
}

std::optional<std::string> ResultCache::lookup(const JobDescriptor& job) const {
  const fs::path path = fs::path(dir_) / (job.command + "-" + job.cache_key());
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream content;
  content << in.rdbuf();
  return content.str();
}

void ResultCache::store(const JobDescriptor& job,
                        const std::string& artifact) const {
  const fs::path path = fs::path(dir_) / (job.command + "-" + job.cache_key());
  atomic_write_file(path.string(), artifact);
}

void atomic_write_file(const std::string& path, const std::string& content) {
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(static_cast<long>(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << content;
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace spectra
