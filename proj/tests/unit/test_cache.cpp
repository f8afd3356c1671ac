#include <gtest/gtest.h>

#include <fstream>
#include <random>

#include "klbraid/cache.hpp"

using namespace klbraid;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("klbraid-cache-test-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

}  // namespace

TEST(CacheJson, Format) {
  CacheEntry e{PolyKind::kP, 5, IntPoly{1, 5}, kVersion};
  EXPECT_EQ(to_json(e), R"({"kind":"P","n":5,"coeffs":["1","5"],"version":"0.1.0"})");
  auto back = entry_from_json(to_json(e));
  EXPECT_EQ(back.kind, PolyKind::kP);
  EXPECT_EQ(back.n, 5);
  EXPECT_EQ(back.poly, (IntPoly{1, 5}));
}

TEST(CacheJson, BigCoefficientsSurvive) {
  IntPoly big{Integer(1), Integer("123456789012345678901234567890")};
  CacheEntry e{PolyKind::kQ, 9, big, kVersion};
  EXPECT_EQ(entry_from_json(to_json(e)).poly, big);
}

TEST(CacheJson, Validation) {
  EXPECT_THROW(entry_from_json("not json"), CacheError);
  EXPECT_THROW(entry_from_json(R"({"kind":"X","n":5,"coeffs":["1"],"version":"0.1.0"})"), CacheError);
  EXPECT_THROW(entry_from_json(R"({"kind":"P","n":5,"coeffs":["1","-5"],"version":"0.1.0"})"), CacheError);
  EXPECT_THROW(entry_from_json(R"({"kind":"P","n":5,"coeffs":["1","5","3"],"version":"0.1.0"})"),
               CacheError);
  EXPECT_THROW(entry_from_json(R"({"kind":"P","n":5,"coeffs":["1x"],"version":"0.1.0"})"), CacheError);
  EXPECT_THROW(entry_from_json(R"({"kind":"P","n":5,"coeffs":[],"version":"0.1.0"})"), CacheError);
  EXPECT_THROW(entry_from_json(R"({"kind":"P","coeffs":["1"],"version":"0.1.0"})"), CacheError);
}

TEST(PolyCache, RoundTrip) {
  TempDir tmp;
  PolyCache cache(tmp.path());
  EXPECT_EQ(cache.file_for(PolyKind::kP, 5), tmp.path() / "P_5.json");
  EXPECT_FALSE(cache.load(PolyKind::kP, 5).has_value());
  cache.store(PolyKind::kP, 5, IntPoly{1, 5});
  cache.store(PolyKind::kQ, 3, IntPoly{2});
  cache.store(PolyKind::kP, 14, IntPoly{1, 8100});
  EXPECT_EQ(cache.load(PolyKind::kP, 5), (IntPoly{1, 5}));

  auto listed = cache.list();
  ASSERT_EQ(listed.size(), 3u);
  EXPECT_EQ(listed[0].n, 5);
  EXPECT_EQ(listed[1].n, 14);
  EXPECT_EQ(listed[2].kind, PolyKind::kQ);

  KlTable table;
  EXPECT_EQ(cache.preload(table), 3);
  EXPECT_EQ(table.find(PolyKind::kQ, 3)->provenance, Provenance::kCache);

  EXPECT_EQ(cache.clear(), 3);
  EXPECT_TRUE(cache.list().empty());
}

TEST(PolyCache, CorruptFilesAreIgnored) {
  TempDir tmp;
  PolyCache cache(tmp.path());
  std::ofstream(tmp.path() / "P_7.json") << "{ broken";
  EXPECT_TRUE(cache.list().empty());
  EXPECT_THROW(cache.load(PolyKind::kP, 7), CacheError);
}
