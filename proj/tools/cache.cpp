#include "cache.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

namespace plethysm::cli {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex(std::uint64_t x) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << x;
  return os.str();
}

}  // namespace

DiskCache::DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<std::filesystem::path> DiskCache::default_directory() {
  if (const char* d = std::getenv("PLETHYSM_CACHE_DIR"); d && *d) return std::filesystem::path(d);
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "plethysm";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "plethysm";
  return std::nullopt;
}

std::filesystem::path DiskCache::path_for(const std::string& key) const { return dir_ / (hex(fnv1a(key)) + ".json"); }

std::optional<Json> DiskCache::load(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    if (j.value("schema", "") != kCacheSchema || j.value("key", "") != key || !j.contains("value"))
      return std::nullopt;
    return j.at("value");
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void DiskCache::save(const std::string& key, const Json& value) const {
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;
  auto created = std::chrono::duration_cast<std::chrono::seconds>(
                     std::chrono::system_clock::now().time_since_epoch())
                     .count();
  Json entry{{"schema", kCacheSchema}, {"key", key}, {"created", created}, {"value", value}};
  std::ostringstream tmp_name;
  tmp_name << ".tmp-" << ::getpid() << '-' << std::hash<std::thread::id>()(std::this_thread::get_id()) << '-'
           << counter++;
  std::filesystem::path tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << entry.dump();
    if (!out) {
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, path_for(key), ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

namespace {

std::string plethysm_key(const Partition& nu, const Partition& mu) {
  return std::string("schur_of_plethysm|") + kCacheSchema + "|" + nu.to_string() + "|" + mu.to_string();
}

}  // namespace

void attach(PlethysmEngine& engine, const DiskCache& cache) {
  PlethysmEngine::Store store;
  store.load = [cache](const Partition& nu, const Partition& mu) -> std::optional<SymExpr> {
    auto j = cache.load(plethysm_key(nu, mu));
    if (!j) return std::nullopt;
    try {
      SymExpr f = symexpr_from_json(*j);
      if (f.basis() != Basis::S || f.degree() != nu.size() * mu.size()) return std::nullopt;
      return f;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  store.save = [cache](const Partition& nu, const Partition& mu, const SymExpr& f) {
    cache.save(plethysm_key(nu, mu), to_json(f));
  };
  engine.set_store(std::move(store));
}

}  // namespace plethysm::cli
