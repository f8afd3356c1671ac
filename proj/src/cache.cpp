#include "klbraid/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"

namespace klbraid {
namespace {

const std::regex& file_pattern() {
  static const std::regex pattern(R"(([PQ])_([0-9]+)\.json)");
  return pattern;
}

}  // namespace

std::string to_json(const CacheEntry& entry) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(entry.kind);
  j["n"] = entry.n;
  auto coeffs = nlohmann::ordered_json::array();
  for (const Integer& c : entry.poly.coeffs()) coeffs.push_back(c.get_str());
  j["coeffs"] = coeffs;
  j["version"] = entry.version;
  return j.dump();
}

CacheEntry entry_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CacheError(std::string("malformed cache entry: ") + e.what());
  }
  CacheEntry entry;
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "P") {
      entry.kind = PolyKind::kP;
    } else if (kind == "Q") {
      entry.kind = PolyKind::kQ;
    } else {
      throw CacheError("unknown polynomial kind '" + kind + "'");
    }
    entry.n = j.at("n").get<int>();
    entry.version = j.at("version").get<std::string>();
    std::vector<Integer> coeffs;
    for (const auto& c : j.at("coeffs")) {
      const std::string digits = c.get<std::string>();
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw CacheError("coefficient '" + digits + "' is not a nonnegative decimal integer");
      }
      coeffs.emplace_back(digits, 10);
    }
    entry.poly = IntPoly(std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    throw CacheError(std::string("malformed cache entry: ") + e.what());
  }
  if (entry.n < 1) throw CacheError("cache entry with n < 1");
  if (entry.poly.is_zero()) throw CacheError("cache entry holds the zero polynomial");
  if (entry.n > 1 && 2 * entry.poly.degree() >= entry.n - 1) {
    throw CacheError("cache entry violates the degree bound deg < (n-1)/2");
  }
  return entry;
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv(kCacheEnvVar); env != nullptr && *env != '\0') return env;
  return ".klbraid-cache";
}

PolyCache::PolyCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path PolyCache::file_for(PolyKind kind, int n) const {
  return dir_ / (to_string(kind) + "_" + std::to_string(n) + ".json");
}

std::optional<IntPoly> PolyCache::load(PolyKind kind, int n) const {
  std::ifstream in(file_for(kind, n));
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  CacheEntry entry = entry_from_json(buffer.str());
  if (entry.kind != kind || entry.n != n) {
    throw CacheError("cache file " + file_for(kind, n).string() + " holds a different entry");
  }
  return entry.poly;
}

void PolyCache::store(PolyKind kind, int n, const IntPoly& poly) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw CacheError("cannot create cache directory " + dir_.string() + ": " + ec.message());
  const auto target = file_for(kind, n);
  const auto staging = target.string() + ".tmp";
  {
    std::ofstream out(staging, std::ios::trunc);
    if (!out) throw CacheError("cannot write " + staging);
    out << to_json(CacheEntry{kind, n, poly, kVersion}) << '\n';
  }
  std::filesystem::rename(staging, target, ec);
  if (ec) throw CacheError("cannot move " + staging + " into place: " + ec.message());
}

std::vector<CacheEntry> PolyCache::list() const {
  std::vector<CacheEntry> entries;
  std::error_code ec;
  if (!std::filesystem::is_directory(dir_, ec)) return entries;
  for (const auto& file : std::filesystem::directory_iterator(dir_)) {
    std::smatch match;
    const std::string name = file.path().filename().string();
    if (!std::regex_match(name, match, file_pattern())) continue;
    const PolyKind kind = match[1] == "P" ? PolyKind::kP : PolyKind::kQ;
    try {
      if (auto poly = load(kind, std::stoi(match[2]))) {
        entries.push_back(CacheEntry{kind, std::stoi(match[2]), *poly, kVersion});
      }
    } catch (const CacheError&) {
    }
  }
  std::sort(entries.begin(), entries.end(), [](const CacheEntry& a, const CacheEntry& b) {
    return std::pair{a.kind, a.n} < std::pair{b.kind, b.n};
  });
  return entries;
}

int PolyCache::clear() const {
  int removed = 0;
  std::error_code ec;
  if (!std::filesystem::is_directory(dir_, ec)) return 0;
  std::vector<std::filesystem::path> doomed;
  for (const auto& file : std::filesystem::directory_iterator(dir_)) {
    if (std::regex_match(file.path().filename().string(), file_pattern())) doomed.push_back(file.path());
  }
  for (const auto& path : doomed) {
    if (std::filesystem::remove(path, ec)) ++removed;
  }
  return removed;
}

int PolyCache::preload(KlTable& table) const {
  int loaded = 0;
  for (auto& entry : list()) {
    table.insert(entry.kind, entry.n, std::move(entry.poly), Provenance::kCache);
    ++loaded;
  }
  return loaded;
}

}  // namespace klbraid
