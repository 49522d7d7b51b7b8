#include "twistlab/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <json.hpp>

namespace twistlab::cli {

using nlohmann::ordered_json;

std::string encode(const CacheRecord& r) {
  ordered_json j;
  j["spec"] = r.spec;
  j["p"] = r.factor.p;
  j["N1"] = r.factor.n1;
  j["N2"] = r.factor.n2;
  j["coefficients"] = r.factor.c;
  j["version"] = r.version;
  return j.dump();
}

std::optional<CacheRecord> decode(const std::string& line) {
  const auto j = ordered_json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  try {
    CacheRecord r;
    r.spec = j.at("spec").get<std::string>();
    r.version = j.at("version").get<std::string>();
    const auto p = j.at("p").get<std::uint64_t>();
    const auto n1 = j.at("N1").get<std::uint64_t>();
    const auto n2 = j.at("N2").get<std::uint64_t>();
    const auto c = j.at("coefficients").get<std::array<std::int64_t, 5>>();
    if (p < 3 || !is_prime_u64(p)) return std::nullopt;
    r.factor = curves::local_factor_from_counts(p, n1, n2);
    if (r.factor.c != c || !r.factor.validate().empty()) return std::nullopt;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

namespace {

// calls `on_record` for each valid current-version record in file order
template <class F>
CacheStats scan(const std::string& path, F&& on_record) {
  CacheStats st;
  std::ifstream in(path);
  std::map<std::pair<std::string, std::uint64_t>, bool> seen;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    ++st.lines;
    auto r = decode(line);
    if (!r) {
      ++st.rejected;
      continue;
    }
    if (r->version != kCacheVersion) {
      ++st.stale;
      continue;
    }
    seen[{r->spec, r->factor.p}] = true;
    on_record(*r);
  }
  st.records = seen.size();
  return st;
}

}  // namespace

CacheStats inspect_cache(const std::string& path) {
  return scan(path, [](const CacheRecord&) {});
}

std::string default_cache_path() {
  const char* env = std::getenv("TWISTLAB_CACHE");
  return env ? std::string(env) : std::string();
}

LocalFactorCache::LocalFactorCache(std::string path) : path_(std::move(path)) {
  // last record wins
  stats_ = scan(path_, [this](const CacheRecord& r) { index_[{r.spec, r.factor.p}] = r.factor; });
  std::ofstream probe(path_, std::ios::app);
  if (!probe) throw InputError("cache path is not writable: " + path_);
  writer_ = std::thread([this] { writer_loop(); });
}

LocalFactorCache::~LocalFactorCache() {
  {
    std::lock_guard<std::mutex> hold(lock_);
    stopping_ = true;
  }
  wake_.notify_all();
  writer_.join();
}

std::optional<curves::LocalFactor> LocalFactorCache::find(const std::string& spec, std::uint64_t p) const {
  std::lock_guard<std::mutex> hold(lock_);
  auto it = index_.find({spec, p});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void LocalFactorCache::store(const CacheRecord& r) {
  ensure(r.factor.validate().empty(), "refusing to cache an inconsistent local factor");
  const std::string line = encode(r);
  {
    std::lock_guard<std::mutex> hold(lock_);
    index_[{r.spec, r.factor.p}] = r.factor;
    queue_.push_back(line);
    ++in_flight_;
  }
  wake_.notify_one();
}

void LocalFactorCache::flush() {
  std::unique_lock<std::mutex> hold(lock_);
  drained_.wait(hold, [this] { return in_flight_ == 0; });
  if (!write_error_.empty()) throw InputError(write_error_);
}

void LocalFactorCache::writer_loop() {
  std::ofstream out(path_, std::ios::app);
  std::unique_lock<std::mutex> hold(lock_);
  for (;;) {
    wake_.wait(hold, [this] { return stopping_ || !queue_.empty(); });
    while (!queue_.empty()) {
      const std::string line = std::move(queue_.front());
      queue_.pop_front();
      hold.unlock();
      out << line << '\n';
      out.flush();
      hold.lock();
      if (!out && write_error_.empty()) write_error_ = "failed writing to cache " + path_;
      --in_flight_;
    }
    drained_.notify_all();
    if (stopping_) return;
  }
}

rankin::FactorSource LocalFactorCache::source() {
  return [this](const curves::GenusTwoCurve& c, std::uint64_t p) {
    const std::string spec = c.spec();
    if (auto hit = find(spec, p)) return *hit;
    const auto factor = curves::local_factor(c, p);
    store({spec, factor, kCacheVersion});
    return factor;
  };
}

}  // namespace twistlab::cli
