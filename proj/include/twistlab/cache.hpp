#pragma once

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>

#include "twistlab/curves.hpp"
#include "twistlab/rankin.hpp"

namespace twistlab::cli {

inline constexpr const char* kCacheVersion = "twistlab-lfactor-1";

struct CacheRecord {
  std::string spec;  ///< canonical curve spec
  curves::LocalFactor factor;
  std::string version = kCacheVersion;
  bool operator==(const CacheRecord&) const = default;
};

/// One JSON object per line.
std::string encode(const CacheRecord& r);
/// Parses and revalidates a line; empty when the line is corrupt or inconsistent.
std::optional<CacheRecord> decode(const std::string& line);

struct CacheStats {
  std::size_t lines = 0;
  std::size_t records = 0;  ///< distinct (spec, p)
  std::size_t rejected = 0;
  std::size_t stale = 0;  ///< well-formed but from another version
};

/// Append-only line-delimited local-factor cache. Lookups are thread-safe; new records go
/// through a queue to a single writer thread.
class LocalFactorCache {
 public:
  explicit LocalFactorCache(std::string path);
  ~LocalFactorCache();
  LocalFactorCache(const LocalFactorCache&) = delete;
  LocalFactorCache& operator=(const LocalFactorCache&) = delete;

  const std::string& path() const { return path_; }
  const CacheStats& load_stats() const { return stats_; }

  std::optional<curves::LocalFactor> find(const std::string& spec, std::uint64_t p) const;
  void store(const CacheRecord& r);
  /// Blocks until every queued record is on disk.
  void flush();

  /// Cached lookup falling back to point counting; the result is stored.
  rankin::FactorSource source();

 private:
  void writer_loop();

  std::string path_;
  CacheStats stats_;
  mutable std::mutex lock_;
  std::map<std::pair<std::string, std::uint64_t>, curves::LocalFactor> index_;
  std::deque<std::string> queue_;
  std::condition_variable wake_, drained_;
  bool stopping_ = false;
  std::size_t in_flight_ = 0;
  std::string write_error_;
  std::thread writer_;
};

/// Loads without opening for writing.
CacheStats inspect_cache(const std::string& path);

/// TWISTLAB_CACHE, or empty.
std::string default_cache_path();

}  // namespace twistlab::cli
