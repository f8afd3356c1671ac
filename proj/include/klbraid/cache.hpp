#pragma once

// On-disk cache of computed polynomials, one JSON file per (kind, n):
//   {"kind":"P","n":5,"coeffs":["1","5"],"version":"0.1.0"}
// Coefficients are decimal strings since they outgrow 64 bits quickly.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "klbraid/exact.hpp"
#include "klbraid/klcore.hpp"

namespace klbraid {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kCacheEnvVar = "KLBRAID_CACHE_DIR";

struct CacheError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CacheEntry {
  PolyKind kind = PolyKind::kP;
  int n = 0;
  IntPoly poly;
  std::string version = kVersion;
};

std::string to_json(const CacheEntry& entry);
// Throws CacheError on malformed JSON, negative coefficients, or a degree
// that violates deg < (n-1)/2.
CacheEntry entry_from_json(const std::string& text);

// $KLBRAID_CACHE_DIR if set, otherwise ".klbraid-cache".
std::filesystem::path default_cache_dir();

class PolyCache {
 public:
  explicit PolyCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path file_for(PolyKind kind, int n) const;  // dir/P_5.json

  std::optional<IntPoly> load(PolyKind kind, int n) const;
  void store(PolyKind kind, int n, const IntPoly& poly) const;
  // Valid entries sorted by kind then n; unreadable files are skipped.
  std::vector<CacheEntry> list() const;
  // Removes the cache files; returns how many were removed.
  int clear() const;
  // Inserts every valid entry into the table with cache provenance.
  int preload(KlTable& table) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace klbraid
