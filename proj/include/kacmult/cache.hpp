#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "kacmult/kl_matrix.hpp"

namespace kacmult {

/// Identifies one cached window computation.
struct CacheKey {
  int m = 1;
  int n = 1;
  Weight lo;
  Weight hi;
  std::string version;

  /// Canonical text form; the file name is its FNV-1a hash.
  std::string canonical() const;
  std::string file_name() const;
};

struct CachedWindow {
  TriangularQMatrix aq;
  TriangularQMatrix kq;
};

/// Content-addressed store of (A_q, K_q) pairs. Loads are validated before
/// being trusted: key and version must match, the window must be the
/// recomputed interval, both matrices unitriangular and mutually inverse.
/// Anything else is reported through the warning sink and treated as a miss.
class MatrixCache {
 public:
  using WarningSink = std::function<void(const std::string&)>;

  explicit MatrixCache(std::filesystem::path dir, WarningSink warn = {});

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const CacheKey& key) const;

  std::optional<CachedWindow> load(const CacheKey& key, const Limits& limits = {}) const;
  /// Writes to a temporary file and renames it into place.
  void store(const CacheKey& key, const CachedWindow& value) const;

 private:
  std::filesystem::path dir_;
  WarningSink warn_;
};

/// A_q and K_q on Window::interval(lo, hi), through the cache when one is given.
CachedWindow compute_window(const Weight& lo, const Weight& hi, const Limits& limits = {},
                            const MatrixCache* cache = nullptr);

std::uint64_t fnv1a(const std::string& text);

}  // namespace kacmult
