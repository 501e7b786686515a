#pragma once

#include <map>
#include <optional>
#include <string>

namespace spectra {

enum class CachePolicy { kUse, kRefresh, kOff };

CachePolicy parse_cache_policy(const std::string& text);

/// Canonical description of one CLI job; the cache key is a hash of the
/// canonical serialization, so identical jobs share identical artifacts.
struct JobDescriptor {
  std::string command;
  std::map<std::string, std::string> params;  // canonical by key order

  std::string canonical() const;
  std::string cache_key() const;  // 16 hex digits
};

/// Content-addressed artifact store under SPECTRA_CACHE_DIR (default
/// ".spectra-cache"). Writes go to a temp file first and are renamed into
/// place, so concurrent invocations are last-writer-wins on identical
/// content and readers never observe partial files.
class ResultCache {
public:
  explicit ResultCache(std::string dir);
  static ResultCache from_environment();

  const std::string& dir() const { return dir_; }
  std::optional<std::string> lookup(const JobDescriptor& job) const;
  void store(const JobDescriptor& job, const std::string& artifact) const;

private:
  std::string dir_;
};

/// Write-to-temp + atomic rename; creates parent directories.
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace spectra
