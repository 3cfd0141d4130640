#include "kacmult/cache.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "kacmult/json_io.hpp"
#include "kacmult/version.hpp"

namespace kacmult {

namespace fs = std::filesystem;

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string CacheKey::canonical() const {
  return "kacmult-window;m=" + std::to_string(m) + ";n=" + std::to_string(n) + ";lo=" + format_weight(lo) +
         ";hi=" + format_weight(hi) + ";version=" + version;
}

std::string CacheKey::file_name() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(canonical())));
  return std::string("window-") + buf + ".json";
}

MatrixCache::MatrixCache(fs::path dir, WarningSink warn) : dir_(std::move(dir)), warn_(std::move(warn)) {
  if (!warn_) warn_ = [](const std::string& msg) { std::cerr << "warning: " << msg << '\n'; };
}

fs::path MatrixCache::path_for(const CacheKey& key) const { return dir_ / key.file_name(); }

std::optional<CachedWindow> MatrixCache::load(const CacheKey& key, const Limits& limits) const {
  const fs::path path = path_for(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  try {
    const json doc = json::parse(in);
    if (doc.at("key").get<std::string>() != key.canonical()) {
      // Same hash, different key, or a stale version: a miss, not corruption.
      if (doc.at("version").get<std::string>() != key.version) return std::nullopt;
      warn_("cache entry " + path.string() + " does not match its key; ignored");
      return std::nullopt;
    }
    const Window window = Window::interval(key.lo, key.hi, limits);
    CachedWindow out{matrix_from_json(doc.at("aq"), window), matrix_from_json(doc.at("kq"), window)};
    for (std::size_t i = 0; i < window.size(); ++i)
      if (!out.aq.at(i, i).is_one() || !out.kq.at(i, i).is_one())
        throw PreconditionError("diagonal entry is not 1");
    if (!is_identity(multiply(out.aq, out.kq))) throw PreconditionError("A_q K_q is not the identity");
    out.aq.set_complete_columns(assemble_aq(window, limits).complete_columns());
    return out;
  } catch (const std::exception& e) {
    warn_("cache entry " + path.string() + " is corrupt (" + e.what() + "); ignored");
    return std::nullopt;
  }
}

void MatrixCache::store(const CacheKey& key, const CachedWindow& value) const {
  fs::create_directories(dir_);
  const json doc = {{"key", key.canonical()},
                    {"version", key.version},
                    {"aq", to_json(value.aq)},
                    {"kq", to_json(value.kq)}};
  const fs::path target = path_for(key);
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    out << doc.dump() << '\n';
    if (!out) throw Error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, target);
}

CachedWindow compute_window(const Weight& lo, const Weight& hi, const Limits& limits, const MatrixCache* cache) {
  const CacheKey key{lo.m(), lo.n(), lo, hi, kVersion};
  if (cache)
    if (auto hit = cache->load(key, limits)) return std::move(*hit);
  const Window window = Window::interval(lo, hi, limits);
  TriangularQMatrix aq = assemble_aq(window, limits);
  TriangularQMatrix kq = invert_unitriangular(aq);
  CachedWindow out{std::move(aq), std::move(kq)};
  if (cache) cache->store(key, out);
  return out;
}

}  // namespace kacmult
