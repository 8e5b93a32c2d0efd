#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "qcw/cache.hpp"
#include "qcw/eta.hpp"

using namespace qcw;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("qcw-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

}  // namespace

TEST_CASE("put then get round-trips exactly") {
    TempDir tmp;
    SeriesCache cache(tmp.path);
    const Series s = invert(pochhammer(1, 50));
    cache.put("1/f1", std::nullopt, s);
    const auto hit = cache.get("1/f1", std::nullopt, 50);
    REQUIRE(hit.has_value());
    CHECK(*hit == s);
}

TEST_CASE("modulus is part of the key") {
    TempDir tmp;
    SeriesCache cache(tmp.path);
    const Series s = pochhammer(1, 20, Int(3));
    cache.put("f1", Int(3), s);
    CHECK(!cache.get("f1", std::nullopt, 20).has_value());
    CHECK(!cache.get("f1", Int(5), 20).has_value());
    REQUIRE(cache.get("f1", Int(3), 20).has_value());
    CHECK(*cache.get("f1", Int(3), 20) == s);
}

TEST_CASE("larger required order than stored is a miss") {
    TempDir tmp;
    SeriesCache cache(tmp.path);
    cache.put("f1", std::nullopt, pochhammer(1, 20));
    CHECK(!cache.get("f1", std::nullopt, 50).has_value());
}

TEST_CASE("corrupt entry is quarantined, not fatal") {
    TempDir tmp;
    SeriesCache cache(tmp.path);
    cache.put("f1", std::nullopt, pochhammer(1, 20));
    const fs::path entry =
        tmp.path / (SeriesCache::key("f1", std::nullopt, 20) + ".json");
    REQUIRE(fs::exists(entry));
    {
        // truncate the payload
        std::ofstream out(entry, std::ios::trunc);
        out << "{\"version\": 1, \"expr\": \"f1\"";
    }
    CHECK(!cache.get("f1", std::nullopt, 20).has_value());
    CHECK(cache.stats().quarantined == 1);
    CHECK(cache.stats().entries == 0);
}

TEST_CASE("stats and clear") {
    TempDir tmp;
    SeriesCache cache(tmp.path);
    cache.put("f1", std::nullopt, pochhammer(1, 10));
    cache.put("f2", std::nullopt, pochhammer(2, 10));
    const auto s = cache.stats();
    CHECK(s.entries == 2);
    CHECK(s.bytes > 0);
    cache.clear();
    CHECK(cache.stats().entries == 0);
}

TEST_CASE("key depends on every component") {
    const auto base = SeriesCache::key("f1", std::nullopt, 10);
    CHECK(SeriesCache::key("f2", std::nullopt, 10) != base);
    CHECK(SeriesCache::key("f1", Int(3), 10) != base);
    CHECK(SeriesCache::key("f1", std::nullopt, 11) != base);
}
